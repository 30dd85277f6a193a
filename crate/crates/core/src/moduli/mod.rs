//! Poincaré polynomials `A_n(x)` of `M̄_(0,n+1)` and `B_n(x)` of the type B
//! analogue `M̄^B_(0,n)`, computed by several independent routes, plus the
//! derived γ-polynomials and total dimensions.

mod analytics;
mod oracle;
mod type_a;
mod type_b;

pub use analytics::{
    check_gamma_recursion, dims_a, dims_b_by_evaluation, dims_b_recursive, gamma_table,
    real_rootedness, GammaRecursionReport,
};
pub use oracle::{chow_sum_value, compute_b_oracle, compute_b_oracle_table, OracleMode};
pub use type_a::{compute_a_keel, compute_a_manin, compute_a_stirling};
pub use type_b::{
    compute_b_bell_iterative, compute_b_quadratic, compute_b_series, compute_b_series_second_form,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::{ArithError, Poly};
use crate::comb::CombError;
use crate::series::SeriesError;

pub const DEFAULT_MAX_N_A: usize = 60;
pub const DEFAULT_MAX_N_B: usize = 40;
pub const DEFAULT_MAX_N_ORACLE: usize = 6;
pub const DEFAULT_MAX_N_STURM: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("method {method} does not compute type {kind} polynomials")]
    WrongKind { method: Method, kind: Kind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
}

impl Kind {
    /// Degree `d` about which the `n`-th polynomial is palindromic
    /// (`n-2` for A, `n-1` for B, clamped at zero).
    pub fn center_times_two(self, n: usize) -> usize {
        match self {
            Kind::A => n.saturating_sub(2),
            Kind::B => n.saturating_sub(1),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            other => Err(format!("unknown kind `{other}` (expected A or B)")),
        }
    }
}

/// The route that produced a table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Keel,
    Manin,
    StirlingClosed,
    QuadraticB,
    BellIterative,
    SeriesExtraction,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Keel,
        Method::Manin,
        Method::StirlingClosed,
        Method::QuadraticB,
        Method::BellIterative,
        Method::SeriesExtraction,
        Method::Oracle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Keel => "keel",
            Method::Manin => "manin",
            Method::StirlingClosed => "stirling_closed",
            Method::QuadraticB => "quadratic_B",
            Method::BellIterative => "bell_iterative",
            Method::SeriesExtraction => "series_extraction",
            Method::Oracle => "oracle",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Method::Keel | Method::Manin | Method::StirlingClosed => Kind::A,
            _ => Kind::B,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let tags: Vec<_> = Method::ALL.iter().map(|m| m.tag()).collect();
                format!("unknown method `{s}` (expected one of {})", tags.join(", "))
            })
    }
}

/// `polys[n]` is `A_n` or `B_n` for `0 ≤ n ≤ max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareTable {
    kind: Kind,
    polys: Vec<Poly>,
    provenance: Vec<Method>,
}

impl PoincareTable {
    pub(crate) fn uniform(kind: Kind, method: Method, polys: Vec<Poly>) -> Self {
        let provenance = vec![method; polys.len()];
        Self {
            kind,
            polys,
            provenance,
        }
    }

    /// Dispatches to the route named by `method`.
    pub fn compute(method: Method, max_n: usize) -> Result<Self, ModuliError> {
        Ok(match method {
            Method::Keel => compute_a_keel(max_n),
            Method::Manin => compute_a_manin(max_n),
            Method::StirlingClosed => compute_a_stirling(max_n),
            Method::QuadraticB => compute_b_quadratic(max_n),
            Method::BellIterative => compute_b_bell_iterative(max_n),
            Method::SeriesExtraction => compute_b_series(max_n)?,
            Method::Oracle => {
                compute_b_oracle_table(max_n, OracleMode::SetPartitions, &Default::default())?
            }
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Poly> {
        self.polys.get(n)
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Poly> {
        self.polys
    }

    pub fn provenance(&self, n: usize) -> Option<Method> {
        self.provenance.get(n).copied()
    }

    /// Indices at which the structural invariants fail: palindromic about
    /// the kind's center, constant term 1, nonnegative integer coefficients.
    pub fn invariant_violations(&self) -> Vec<usize> {
        let first = match self.kind {
            Kind::A => 2,
            Kind::B => 1,
        };
        (first..self.polys.len())
            .filter(|&n| {
                let p = &self.polys[n];
                let d = self.kind.center_times_two(n);
                let integral_nonneg = p
                    .to_integers()
                    .is_some_and(|v| v.iter().all(|c| c.sign() != num_bigint::Sign::Minus));
                !(crate::arith::is_palindromic(p, d)
                    && p.degree() == Some(d)
                    && p.coeff(0) == crate::arith::rat(1)
                    && integral_nonneg)
            })
            .collect()
    }
}
