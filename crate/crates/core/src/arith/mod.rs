//! Exact arithmetic: rationals, dense univariate polynomials over ℚ,
//! rational functions in normal form, and the polynomial analytics
//! (palindromicity, γ-decomposition, unimodality, real-rootedness).
//!
//! Nothing in this module touches floating point.

mod analysis;
mod intpoly;
mod poly;
mod ratfunc;
mod ring;
mod sturm;
mod zpoly;

pub use analysis::{
    gamma_decompose, is_gamma_positive, is_palindromic, is_unimodal, GammaDecomposition,
};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use ring::Ring;
pub use sturm::{
    fold_palindromic, is_real_rooted, real_root_count, square_free_part, sturm_sequence,
};
pub use zpoly::IntPoly;

use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("polynomial is not palindromic with respect to degree {d}")]
    NotPalindromic { d: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function {0} is not a polynomial")]
    NotPolynomial(String),
}
