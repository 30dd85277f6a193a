//! Combinatorial primitives: binomials, partial Bell polynomials, Stirling
//! numbers, set and signed partition enumeration, and the characteristic
//! polynomials of the type A and type B partition lattices.

mod bell;
mod charpoly;
mod partitions;
mod stirling;

pub use bell::{bell_polynomial, bell_reciprocal, BellTable};
pub use charpoly::{
    char_poly_b, reduced_char_poly_a, reduced_char_poly_a_egf, reduced_char_poly_b,
    reduced_char_poly_b_egf,
};
pub use partitions::{
    enumerate_set_partitions, enumerate_signed_partitions, EnumerationLimits, SetPartition,
    SetPartitions, SignedPartition, SignedPartitions,
};
pub use stirling::{stirling_first, stirling_second, StirlingTable};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("Bell_{{{n},{k}}} needs {needed} arguments, got {given}")]
    BadIndex {
        n: usize,
        k: usize,
        needed: usize,
        given: usize,
    },
    #[error("enumeration of size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

/// Pascal's triangle, `rows[n][k] = C(n, k)`.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(n, k)`, zero when `k > n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::default();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
