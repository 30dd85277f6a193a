use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{ArithError, Poly, Rational};

/// Element of ℚ(x) in normal form: the denominator is monic and coprime to
/// the numerator, and zero is `0/1`. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Reduces `num/den` (den nonzero) to normal form.
    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs()[0].recip();
            return Self::from_poly(num.scale(&inv));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::with_monic_den(num, den)
    }

    /// `num` and `den` already coprime; only fixes the leading coefficient.
    fn with_monic_den(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            return Self { num, den };
        }
        let inv = lc.recip();
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.add_signed(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add_signed(rhs, true)
    }

    fn add_signed(&self, rhs: &Self, subtract: bool) -> Self {
        let combine = |a: &Poly, b: &Poly| if subtract { a - b } else { a + b };
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(combine(&self.num, &rhs.num));
        }
        if self.den == rhs.den {
            return Self::normalize(combine(&self.num, &rhs.num), self.den.clone());
        }
        // Henrici: with g = gcd(b, d), only g can share factors with the
        // new numerator.
        let g = self.den.gcd(&rhs.den);
        let b_red = self.den.div_exact(&g).expect("gcd divides");
        let d_red = rhs.den.div_exact(&g).expect("gcd divides");
        let num = combine(&(&self.num * &d_red), &(&rhs.num * &b_red));
        if num.is_zero() {
            return Self::zero();
        }
        let den = &b_red * &rhs.den;
        if g.is_one() {
            return Self::with_monic_den(num, den);
        }
        let h = num.gcd(&g);
        if h.is_one() {
            Self::with_monic_den(num, den)
        } else {
            Self::with_monic_den(
                num.div_exact(&h).expect("gcd divides"),
                den.div_exact(&h).expect("gcd divides"),
            )
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cut = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let den = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        Self::with_monic_den(num, den)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::normalize(self.num.scale(k), self.den.clone())
    }

    /// The polynomial value; fails unless the normal-form denominator is 1.
    pub fn to_poly(&self) -> Result<Poly, ArithError> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(ArithError::NotPolynomial(self.to_string()))
        }
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        if num_traits::Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl super::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_bigint(k: &BigInt) -> Self {
        RatFunc::constant(Rational::from_integer(k.clone()))
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_one() {
            return self.clone();
        }
        self.scale(&Rational::from_integer(k.clone()))
    }
}
