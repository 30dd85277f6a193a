//! Read-only OEIS client for named sequences, with an on-disk cache and a
//! bundled copy of A074059.
//!
//! Sequences are fetched as b-files from `https://oeis.org/A??????/b??????.txt`.
//! Grammar, one record per line:
//!
//! ```text
//! line    := blank | comment | record
//! comment := '#' any*
//! record  := ws* index ws+ value ws*      (index, value: optionally signed decimal)
//! ```
//!
//! Indices must be consecutive; the first one is the sequence offset.

mod cache;
mod transport;

use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::moduli::{compute_a_keel, dims_a};

pub use cache::{default_cache_dir, Cache, CACHE_ENV};
pub use transport::{HttpTransport, NoNetwork, Transport, TransportError};

/// The bundled A074059 b-file, generated from the Keel recursion by
/// `moduli seed-fixtures`.
pub const A074059_FIXTURE: &str = include_str!("../../fixtures/b074059.txt");

/// OEIS A074059 has `a(n) = dim H(M̄_(0,n)) = A_(n-1)(1)`, so its index is
/// our `n` shifted by one.
pub const A074059_SHIFT: i64 = 1;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed OEIS id {0:?}: expected 'A' followed by 6 digits")]
    BadId(String),
    #[error("b-file line {line}: {reason}: {content:?}")]
    Parse {
        line: usize,
        content: String,
        reason: &'static str,
    },
    #[error("b-file contains no terms")]
    Empty,
    #[error("network unavailable: {0}")]
    NetworkUnavailable(String),
    #[error("unknown sequence {0}")]
    UnknownSequence(OeisId),
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OeisId(u32);

impl OeisId {
    pub const A074059: OeisId = OeisId(74059);

    pub fn number(self) -> u32 {
        self.0
    }

    pub fn bfile_url(self) -> String {
        format!("https://oeis.org/{self}/b{:06}.txt", self.0)
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl FromStr for OeisId {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .strip_prefix('A')
            .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| OeisError::BadId(s.to_owned()))?;
        Ok(OeisId(digits.parse().expect("six ascii digits")))
    }
}

impl Serialize for OeisId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Terms of a b-file with the index of the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl BFile {
    /// The term with OEIS index `index`.
    pub fn term(&self, index: i64) -> Option<&BigInt> {
        let i = usize::try_from(index.checked_sub(self.offset)?).ok()?;
        self.terms.get(i)
    }

    pub fn render(&self, header: &str) -> String {
        let mut out = String::new();
        for line in header.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        for (i, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{} {t}\n", self.offset + i as i64));
        }
        out
    }
}

pub fn parse_bfile(text: &str) -> Result<BFile, OeisError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason| OeisError::Parse {
            line: i + 1,
            content: raw.to_owned(),
            reason,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected 'index value'"));
        };
        let index: i64 = index.parse().map_err(|_| err("bad index"))?;
        let value: BigInt = value.parse().map_err(|_| err("bad value"))?;
        let start = *offset.get_or_insert(index);
        if index != start + terms.len() as i64 {
            return Err(err("non-consecutive index"));
        }
        terms.push(value);
    }
    match offset {
        Some(offset) => Ok(BFile { offset, terms }),
        None => Err(OeisError::Empty),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Network,
    Cache,
    BundledFixture,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Network => "network",
            Source::Cache => "cache",
            Source::BundledFixture => "bundled fixture",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FetchPolicy {
    #[default]
    CacheFirst,
    NetworkFirst,
    /// Only the bundled fixture is consulted.
    Offline,
}

impl FromStr for FetchPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cache_first" => Ok(FetchPolicy::CacheFirst),
            "network_first" => Ok(FetchPolicy::NetworkFirst),
            "offline" => Ok(FetchPolicy::Offline),
            _ => Err(format!(
                "unknown policy {s:?}: expected cache_first, network_first or offline"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceRecord {
    pub oeis_id: OeisId,
    pub offset: i64,
    #[serde(serialize_with = "decimal_strings")]
    pub terms: Vec<BigInt>,
    /// Seconds since the Unix epoch.
    pub fetched_at: u64,
    pub source: Source,
}

fn decimal_strings<S: Serializer>(terms: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(terms.iter().map(ToString::to_string))
}

impl SequenceRecord {
    fn new(oeis_id: OeisId, bfile: BFile, source: Source) -> Self {
        let fetched_at = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        Self {
            oeis_id,
            offset: bfile.offset,
            terms: bfile.terms,
            fetched_at,
            source,
        }
    }

    pub fn term(&self, index: i64) -> Option<&BigInt> {
        let i = usize::try_from(index.checked_sub(self.offset)?).ok()?;
        self.terms.get(i)
    }
}

pub fn bundled_fixture(id: OeisId) -> Option<&'static str> {
    (id == OeisId::A074059).then_some(A074059_FIXTURE)
}

/// Fetches b-files through a [`Transport`] and keeps them in a [`Cache`].
pub struct Client<T: Transport> {
    transport: T,
    cache: Cache,
}

enum NetOutcome {
    Got(String),
    Missing,
    Down(String),
}

impl<T: Transport> Client<T> {
    pub fn new(transport: T, cache: Cache) -> Self {
        Self { transport, cache }
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    pub fn transport(&self) -> &T {
        &self.transport
    }

    fn fetch_network(&self, id: OeisId) -> NetOutcome {
        match self.transport.get(&id.bfile_url()) {
            Ok(body) => NetOutcome::Got(body),
            Err(TransportError::NotFound) => NetOutcome::Missing,
            Err(TransportError::Unavailable(e)) => NetOutcome::Down(e),
        }
    }

    fn read_fixture(id: OeisId) -> Option<Result<SequenceRecord, OeisError>> {
        bundled_fixture(id).map(|text| {
            parse_bfile(text).map(|b| SequenceRecord::new(id, b, Source::BundledFixture))
        })
    }

    fn read_cache(&self, id: OeisId) -> Option<Result<SequenceRecord, OeisError>> {
        match self.cache.read(id) {
            Ok(Some(text)) => {
                Some(parse_bfile(&text).map(|b| SequenceRecord::new(id, b, Source::Cache)))
            }
            Ok(None) => None,
            Err(e) => Some(Err(e.into())),
        }
    }

    fn store(&self, id: OeisId, body: String) -> Result<SequenceRecord, OeisError> {
        let bfile = parse_bfile(&body)?;
        self.cache.write(id, &body)?;
        Ok(SequenceRecord::new(id, bfile, Source::Network))
    }

    pub fn fetch(&self, id: OeisId, policy: FetchPolicy) -> Result<SequenceRecord, OeisError> {
        match policy {
            FetchPolicy::Offline => {
                Self::read_fixture(id).unwrap_or(Err(OeisError::UnknownSequence(id)))
            }
            FetchPolicy::CacheFirst => {
                if let Some(r) = self.read_cache(id) {
                    return r;
                }
                match self.fetch_network(id) {
                    NetOutcome::Got(body) => self.store(id, body),
                    NetOutcome::Missing | NetOutcome::Down(_) => {
                        Self::read_fixture(id).unwrap_or(Err(OeisError::UnknownSequence(id)))
                    }
                }
            }
            FetchPolicy::NetworkFirst => match self.fetch_network(id) {
                NetOutcome::Got(body) => self.store(id, body),
                NetOutcome::Missing => self
                    .read_cache(id)
                    .or_else(|| Self::read_fixture(id))
                    .unwrap_or(Err(OeisError::UnknownSequence(id))),
                NetOutcome::Down(e) => self
                    .read_cache(id)
                    .or_else(|| Self::read_fixture(id))
                    .unwrap_or(Err(OeisError::NetworkUnavailable(e))),
            },
        }
    }
}

/// [`Client::fetch`] over HTTP with the default cache location.
pub fn fetch_sequence(id: OeisId, policy: FetchPolicy) -> Result<SequenceRecord, OeisError> {
    Client::new(HttpTransport::default(), Cache::from_env()?).fetch(id, policy)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Index into the computed list.
    pub n: usize,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimsComparison {
    /// Number of computed entries that had an OEIS counterpart.
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl DimsComparison {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `computed[n]` with the OEIS term of index `n + shift` wherever
/// both exist.
pub fn compare_dims(record: &SequenceRecord, computed: &[BigInt], shift: i64) -> DimsComparison {
    let mut compared = 0;
    for (n, value) in computed.iter().enumerate() {
        let Some(expected) = record.term(n as i64 + shift) else {
            continue;
        };
        compared += 1;
        if expected != value {
            return DimsComparison {
                compared,
                first_mismatch: Some(Mismatch {
                    n,
                    expected: expected.to_string(),
                    computed: value.to_string(),
                }),
            };
        }
    }
    DimsComparison {
        compared,
        first_mismatch: None,
    }
}

/// `b_0 = 1`, `b_n = 2ⁿ a(n + 1) - n b_(n-1)` from A074059 terms, for as
/// long as the record has them, up to `max_n`.
pub fn dims_b_from_record(record: &SequenceRecord, max_n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    for n in 1..=max_n {
        let Some(a) = record.term(n as i64 + A074059_SHIFT) else {
            break;
        };
        let next = (a << n) - BigInt::from(n) * &out[n - 1];
        out.push(next);
    }
    out
}

/// Number of `A_n` entries in the bundled fixture.
pub const FIXTURE_MAX_N: usize = 40;

/// A074059 b-file `a(n + 1) = A_n(1)` for `1 ≤ n ≤ max_n`, from the Keel
/// recursion.
pub fn a074059_from_keel(max_n: usize) -> BFile {
    let dims = dims_a(&compute_a_keel(max_n));
    BFile {
        offset: 1 + A074059_SHIFT,
        terms: dims.into_iter().skip(1).collect(),
    }
}

/// The text of the bundled fixture, as `moduli seed-fixtures` writes it.
pub fn render_a074059_fixture() -> String {
    a074059_from_keel(FIXTURE_MAX_N).render(
        "A074059: dimension of the cohomology of the moduli space of n-pointed\n\
         stable curves of genus 0, a(n) = A_(n-1)(1).\n\
         Generated from the Keel recursion by `moduli seed-fixtures`.",
    )
}
