use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{intpoly, ArithError, Rational};

/// Dense univariate polynomial over ℚ.
///
/// `coeffs[i]` is the coefficient of `x^i`; the last stored coefficient is
/// nonzero, so the zero polynomial is the empty vector and structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients in ascending degree.
    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `a + b x`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    /// `(v, d)` with `self = v / d`, `d > 0` the lcm of the denominators.
    pub(crate) fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v = if den.is_one() {
            self.coeffs.iter().map(|c| c.numer().clone()).collect()
        } else {
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect()
        };
        (v, den)
    }

    pub(crate) fn from_integer_form(v: Vec<BigInt>, den: &BigInt) -> Self {
        if den.is_one() {
            return Self::from_coeffs(v.into_iter().map(Rational::from_integer).collect());
        }
        Self::from_coeffs(
            v.into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        )
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        let k = Rational::from_integer(k.clone());
        Self {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(1 + x)^k` from binomial coefficients.
    pub fn one_plus_x_pow(k: usize) -> Self {
        let mut row = vec![BigInt::one()];
        for i in 1..=k {
            let prev = row[i - 1].clone();
            row.push(prev * BigInt::from(k - i + 1) / BigInt::from(i));
        }
        Self::from_ints(row)
    }

    /// Scales to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if dn < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut quot = vec![Rational::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::NotPolynomial(format!("({self})/({divisor})")))
        }
    }

    /// Monic gcd over ℚ[x]; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        let (a, _) = self.integer_form();
        let (b, _) = other.integer_form();
        Poly::from_integer_form(intpoly::gcd(&a, &b), &BigInt::one()).monic()
    }

    /// Formats in descending powers, e.g. `x^2+8x+1`.
    pub fn to_plain(&self) -> String {
        self.render(false)
    }

    /// LaTeX in descending powers, e.g. `x^{10}+\frac{1}{2}x+1`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            let unit = mag.is_one() && i > 0;
            if !unit {
                if mag.is_integer() {
                    out.push_str(&mag.numer().to_string());
                } else if latex {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
                } else {
                    out.push_str(&format!("{}/{}", mag.numer(), mag.denom()));
                    if i > 0 {
                        out.push('*');
                    }
                }
            }
            match i {
                0 => {}
                1 => out.push('x'),
                _ if latex && i >= 10 => out.push_str(&format!("x^{{{i}}}")),
                _ => out.push_str(&format!("x^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_plain())
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let c = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) if negate_b => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate_b => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(c);
    }
    Poly::from_coeffs(out)
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // Multiply over ℤ after clearing denominators; one gcd per output
        // coefficient instead of one per partial product.
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        Poly::from_integer_form(intpoly::mul(&a, &b), &(da * db))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl super::Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
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
        Poly::constant(Rational::from_integer(k.clone()))
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        Poly::scale_int(self, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c.iter().copied())
    }

    #[test]
    fn binomial_square() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
    }

    #[test]
    fn chi_b2_from_reduced() {
        // (x - 1)(x - 3) = x^2 - 4x + 3
        assert_eq!(&p(&[-1, 1]) * &p(&[-3, 1]), p(&[3, -4, 1]));
    }

    #[test]
    fn additive_identity_and_trailing_zeros() {
        let a = p(&[3, 0, 2]);
        assert_eq!(&a + &Poly::zero(), a);
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn degree_of_product() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 0, 5]);
        assert_eq!((&a * &b).degree(), Some(5));
    }

    #[test]
    fn fractional_multiplication() {
        let a = Poly::from_coeffs(vec![ratio(1, 2), ratio(2, 3)]);
        let b = Poly::from_coeffs(vec![ratio(3, 4), rat(1)]);
        // (1/2 + 2/3 x)(3/4 + x) = 3/8 + (1/2 + 1/2) x + 2/3 x^2
        assert_eq!(
            &a * &b,
            Poly::from_coeffs(vec![ratio(3, 8), rat(1), ratio(2, 3)])
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), Poly::one());
        assert_eq!(
            Poly::zero().gcd(&p(&[2, 4])),
            Poly::from_coeffs(vec![ratio(1, 2), rat(1)])
        );
        assert_eq!(a.div_rem(&Poly::zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn gcd_with_repeated_factors() {
        let l = p(&[-1, 1]);
        let a = &l.pow(3) * &p(&[5, 0, 1]);
        let b = &l.pow(2) * &p(&[2, 7]);
        assert_eq!(a.gcd(&b), l.pow(2));
    }

    #[test]
    fn plain_and_latex_rendering() {
        assert_eq!(p(&[1, 8, 1]).to_plain(), "x^2+8x+1");
        assert_eq!(p(&[1, -1]).to_plain(), "-x+1");
        assert_eq!(Poly::zero().to_plain(), "0");
        assert_eq!(Poly::monomial(rat(3), 10).to_latex(), "3x^{10}");
        assert_eq!(
            Poly::from_coeffs(vec![rat(0), ratio(-1, 2)]).to_plain(),
            "-1/2*x"
        );
        assert_eq!(
            Poly::from_coeffs(vec![ratio(1, 2)]).to_latex(),
            "\\frac{1}{2}"
        );
    }

    #[test]
    fn one_plus_x_power() {
        assert_eq!(Poly::one_plus_x_pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(Poly::one_plus_x_pow(0), Poly::one());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 122, 482, 122, 1]).eval(&rat(1)), rat(728));
    }
}
