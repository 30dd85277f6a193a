use std::ops::{Add, AddAssign, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{intpoly, Poly, Rational, Ring};

/// Dense polynomial over ℤ, `coeffs[i]` the coefficient of `x^i`, no
/// trailing zeros.
///
/// Integer-only counterpart of [`Poly`] for the recursions whose every
/// intermediate value is integral; it skips rational normalization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        intpoly::trim(&mut coeffs);
        Self(coeffs)
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(coeffs.into_iter().map(Into::into).collect())
    }

    /// `None` if some coefficient of `p` is not an integer.
    pub fn from_poly(p: &Poly) -> Option<Self> {
        p.to_integers().map(Self)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        intpoly::degree(&self.0)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coefficient by `k`. Panics if inexact.
    pub fn div_exact_int(&self, k: &BigInt) -> Self {
        Self(
            self.0
                .iter()
                .map(|c| {
                    let (q, r) = num_integer::Integer::div_rem(c, k);
                    assert!(r.is_zero(), "{c} is not divisible by {k}");
                    q
                })
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        Self(v)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut v = self.0.clone();
        if v.len() < rhs.0.len() {
            v.resize(rhs.0.len(), BigInt::zero());
        }
        for (a, b) in v.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        IntPoly::from_coeffs(v)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigInt::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        intpoly::trim(&mut self.0);
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly(intpoly::mul(&self.0, &rhs.0))
    }
}

impl From<IntPoly> for Poly {
    fn from(p: IntPoly) -> Poly {
        p.to_poly()
    }
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
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
        IntPoly(self.0.iter().map(|c| -c).collect())
    }
    fn from_bigint(k: &BigInt) -> Self {
        IntPoly::from_coeffs(vec![k.clone()])
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_arithmetic() {
        let a = IntPoly::from_ints([1, 2]);
        let b = IntPoly::from_ints([-1, 0, 3]);
        assert_eq!(&(&a * &b).to_poly(), &(&a.to_poly() * &b.to_poly()));
        assert_eq!(&(&a + &b).to_poly(), &(&a.to_poly() + &b.to_poly()));
        assert!((&a - &a).is_zero());
        assert_eq!(IntPoly::from_poly(&a.to_poly()), Some(a.clone()));
        assert_eq!(a.shift(2), IntPoly::from_ints([0, 0, 1, 2]));
        assert_eq!(b.eval_at_one(), BigInt::from(2));
        assert_eq!(
            IntPoly::from_ints([2, 4]).div_exact_int(&BigInt::from(2)),
            a
        );
    }
}
