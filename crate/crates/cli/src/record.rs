use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use moduli_core::arith::{Poly, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecordKind {
    A,
    B,
    #[serde(rename = "gammaA")]
    GammaA,
    #[serde(rename = "gammaB")]
    GammaB,
    #[serde(rename = "dims")]
    Dims,
    #[serde(rename = "check")]
    Check,
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordKind::A => "A",
            RecordKind::B => "B",
            RecordKind::GammaA => "gammaA",
            RecordKind::GammaB => "gammaB",
            RecordKind::Dims => "dims",
            RecordKind::Check => "check",
        })
    }
}

/// One output line. `coeffs` holds exact decimal strings in ascending
/// degree; check records carry `status` and, on failure, `detail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub n: usize,
    pub method: String,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl OutputRecord {
    pub fn poly(kind: RecordKind, n: usize, method: &str, p: &Poly) -> Self {
        Self {
            kind,
            n,
            method: method.to_owned(),
            coeffs: p.coeffs().iter().map(ToString::to_string).collect(),
            status: None,
            detail: None,
        }
    }

    pub fn check(n: usize, method: &str, passed: bool, detail: Option<String>) -> Self {
        Self {
            kind: RecordKind::Check,
            n,
            method: method.to_owned(),
            coeffs: Vec::new(),
            status: Some(if passed { "pass" } else { "fail" }.to_owned()),
            detail,
        }
    }

    /// The payload as an exact polynomial. Fails on a malformed coefficient.
    pub fn to_poly(&self) -> Result<Poly, String> {
        self.coeffs
            .iter()
            .map(|c| Rational::from_str(c).map_err(|e| format!("coefficient {c:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::from_coeffs)
    }

    pub fn passed(&self) -> bool {
        self.status.as_deref() != Some("fail")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    #[default]
    Plain,
}

/// Writes records in `format`, one per line.
pub struct Emitter<'w> {
    out: &'w mut dyn Write,
    format: Format,
    wrote_header: bool,
}

impl<'w> Emitter<'w> {
    pub fn new(out: &'w mut dyn Write, format: Format) -> Self {
        Self {
            out,
            format,
            wrote_header: false,
        }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn emit(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(self.out, "{line}")
            }
            Format::Csv => self.emit_csv(r),
            Format::Plain => writeln!(self.out, "{}", plain(r)),
            Format::Latex => writeln!(self.out, "{}", latex(r)),
        }
    }

    fn emit_csv(&mut self, r: &OutputRecord) -> io::Result<()> {
        if !self.wrote_header {
            writeln!(self.out, "kind,n,method,degree,coefficient")?;
            self.wrote_header = true;
        }
        if r.kind == RecordKind::Check {
            return writeln!(
                self.out,
                "{},{},{},,{}",
                r.kind,
                r.n,
                r.method,
                r.status.as_deref().unwrap_or("")
            );
        }
        for (d, c) in r.coeffs.iter().enumerate() {
            writeln!(self.out, "{},{},{},{d},{c}", r.kind, r.n, r.method)?;
        }
        Ok(())
    }

    /// Writes a line outside the record stream, only in plain format.
    pub fn note(&mut self, line: &str) -> io::Result<()> {
        if self.format == Format::Plain {
            writeln!(self.out, "{line}")?;
        }
        Ok(())
    }
}

fn plain(r: &OutputRecord) -> String {
    match r.kind {
        RecordKind::Check => {
            let status = r.status.as_deref().unwrap_or("");
            match &r.detail {
                Some(d) => format!("{status} {} {d}", r.method),
                None => format!("{status} {}", r.method),
            }
        }
        RecordKind::Dims => r.coeffs.join(","),
        _ => r.to_poly().map_or_else(|e| e, |p| p.to_plain()),
    }
}

fn latex(r: &OutputRecord) -> String {
    let symbol = match r.kind {
        RecordKind::A => "A",
        RecordKind::B => "B",
        RecordKind::GammaA => "\\gamma^A",
        RecordKind::GammaB => "\\gamma^B",
        RecordKind::Dims | RecordKind::Check => return plain(r),
    };
    let body = r.to_poly().map_or_else(|e| e, |p| p.to_latex());
    format!("{symbol}_{{{}}}(x) = {body}", r.n)
}
