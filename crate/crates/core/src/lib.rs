//! Exact Poincaré polynomials of `M̄_(0,n+1)` (`A_n`) and of its type B
//! analogue (`B_n`), with the series toolkit they are built from.
//!
//! - [`arith`]: rationals, polynomials over ℚ and ℤ, rational functions,
//!   Sturm sequences, γ-vectors.
//! - [`series`]: truncated exponential generating functions over ℚ(x).
//! - [`comb`]: binomials, Stirling and Bell numbers, set and signed
//!   partitions, characteristic polynomials.
//! - [`moduli`]: every route to the `A_n` and `B_n` tables.
//! - [`verify`]: residual checks of the generating-function identities.
//! - [`oeis`]: A074059 cross-check with an on-disk cache.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod comb;
pub mod moduli;
pub mod oeis;
pub mod series;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
    #[error(transparent)]
    Comb(#[from] comb::CombError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Moduli(#[from] moduli::ModuliError),
    #[error(transparent)]
    Oeis(#[from] oeis::OeisError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
