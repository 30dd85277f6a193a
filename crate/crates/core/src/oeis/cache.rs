use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::OeisId;

/// Overrides the cache directory.
pub const CACHE_ENV: &str = "MODULI_OEIS_CACHE";

/// `$MODULI_OEIS_CACHE`, else `<user cache dir>/moduli-oeis`.
pub fn default_cache_dir() -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => Some(PathBuf::from(dir)),
        _ => dirs::cache_dir().map(|d| d.join("moduli-oeis")),
    }
}

/// Directory of `<id>.bfile` files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn from_env() -> io::Result<Self> {
        default_cache_dir()
            .map(Self::new)
            .ok_or_else(|| io::Error::new(io::ErrorKind::NotFound, "no cache directory"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: OeisId) -> PathBuf {
        self.dir.join(format!("{id}.bfile"))
    }

    pub fn read(&self, id: OeisId) -> io::Result<Option<String>> {
        match std::fs::read_to_string(self.path(id)) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// over `<id>.bfile`.
    pub fn write(&self, id: OeisId, contents: &str) -> io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(contents.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(id)).map_err(|e| e.error)?;
        Ok(())
    }
}
