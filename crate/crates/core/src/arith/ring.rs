use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Commutative ring with unit, containing ℤ.
///
/// This is the coefficient interface shared by Bell-polynomial tables,
/// which are evaluated over [`Rational`], [`super::Poly`] and
/// [`super::RatFunc`] alike.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_bigint(k: &BigInt) -> Self;

    fn scale_int(&self, k: &BigInt) -> Self {
        self.mul_ref(&Self::from_bigint(k))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_bigint(k: &BigInt) -> Self {
        Rational::from_integer(k.clone())
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self * Rational::from_integer(k.clone())
    }
}
