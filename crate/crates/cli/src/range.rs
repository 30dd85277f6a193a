use std::ops::RangeInclusive;
use std::str::FromStr;

use moduli_core::arith::{Poly, Rational};

/// `n`, `a..b` or `a..=b`, both ends inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
}

impl NRange {
    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid index {t:?} in range {s:?}"))
        };
        let (start, end) = match s.split_once("..") {
            None => {
                let n = num(s)?;
                (n, n)
            }
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(NRange { start, end })
    }
}

/// Comma-separated coefficients in ascending degree, each an integer or a
/// fraction `p/q`.
pub fn parse_coeffs(s: &str) -> Result<Poly, String> {
    let coeffs = s
        .split(',')
        .map(|c| {
            let c = c.trim();
            Rational::from_str(c).map_err(|_| format!("invalid coefficient {c:?}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = Poly::from_coeffs(coeffs);
    if p.is_zero() {
        return Err("the zero polynomial has no roots to count".to_owned());
    }
    Ok(p)
}
