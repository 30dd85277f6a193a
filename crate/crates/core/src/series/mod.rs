//! Truncated exponential generating functions in `t` with coefficients in
//! ℚ(x).
//!
//! An [`Egf`] of weight `w` and order `N` stores `c_0 … c_N` and represents
//! `Σ c_n(x) tⁿ / (wⁿ n!)`. Weight 1 is the usual EGF normalization (type A),
//! weight 2 the type B one, so that `F^B(2t) = F^A(t)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::arith::{ArithError, Poly, RatFunc, Rational};
use crate::comb::{BellTable, Binomials};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("weight mismatch: {left:?} vs {right:?}")]
    WeightMismatch { left: Weight, right: Weight },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is zero, series is not a unit")]
    NonUnitConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,
    #[error("linear coefficient is zero, no compositional inverse")]
    NotInvertible,
    #[error("constant term must be {expected}")]
    BadConstantTerm { expected: &'static str },
    #[error("operation needs order at least {needed}, got {order}")]
    OrderTooLow { needed: usize, order: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Normalization weight `w` of an [`Egf`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    /// `tⁿ / n!`
    A,
    /// `tⁿ / (2ⁿ n!)`
    B,
}

impl Weight {
    pub fn factor(self) -> u32 {
        match self {
            Weight::A => 1,
            Weight::B => 2,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Egf {
    weight: Weight,
    coeffs: Vec<RatFunc>,
}

impl Egf {
    /// Panics if `coeffs` is empty.
    pub fn new(weight: Weight, coeffs: Vec<RatFunc>) -> Self {
        assert!(!coeffs.is_empty(), "an Egf has at least the constant term");
        Self { weight, coeffs }
    }

    pub fn from_polys(weight: Weight, polys: impl IntoIterator<Item = Poly>) -> Self {
        Self::new(weight, polys.into_iter().map(RatFunc::from_poly).collect())
    }

    /// Converts ordinary coefficients `a_n` (series `Σ a_n tⁿ`) to the
    /// normalized form `c_n = wⁿ n! a_n`.
    pub fn from_ordinary(weight: Weight, ordinary: Vec<RatFunc>) -> Self {
        let w = BigInt::from(weight.factor());
        let mut scale = BigInt::one();
        let coeffs = ordinary
            .into_iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    scale *= &w * BigInt::from(n);
                }
                scale_int(&a, &scale)
            })
            .collect();
        Self::new(weight, coeffs)
    }

    /// The ordinary coefficients `c_n / (wⁿ n!)`.
    pub fn to_ordinary(&self) -> Vec<RatFunc> {
        let w = BigInt::from(self.weight.factor());
        let mut scale = BigInt::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    scale *= &w * BigInt::from(n);
                }
                c.scale(&Rational::new(BigInt::one(), scale.clone()))
            })
            .collect()
    }

    pub fn zero(weight: Weight, order: usize) -> Self {
        Self::new(weight, vec![RatFunc::zero(); order + 1])
    }

    pub fn constant(weight: Weight, order: usize, c: RatFunc) -> Self {
        let mut s = Self::zero(weight, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(weight: Weight, order: usize) -> Self {
        Self::constant(weight, order, RatFunc::one())
    }

    /// The series `t`; its coefficient `c_1` is `w`.
    pub fn t(weight: Weight, order: usize) -> Self {
        let mut s = Self::zero(weight, order);
        if order >= 1 {
            s.coeffs[1] = RatFunc::constant(Rational::from_integer(weight.factor().into()));
        }
        s
    }

    /// `e^t` in weight 1, all coefficients 1.
    pub fn exp_t(order: usize) -> Self {
        Self::new(Weight::A, vec![RatFunc::one(); order + 1])
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RatFunc> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &RatFunc {
        &self.coeffs[n]
    }

    /// All coefficients as polynomials, failing on the first that is not.
    pub fn to_polys(&self) -> Result<Vec<Poly>, ArithError> {
        self.coeffs.iter().map(RatFunc::to_poly).collect()
    }

    /// Same series in another normalization: `c'_n = c_n (w'/w)ⁿ`.
    pub fn reweight(&self, target: Weight) -> Self {
        if target == self.weight {
            return self.clone();
        }
        let ratio = Rational::new(target.factor().into(), self.weight.factor().into());
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    power *= &ratio;
                }
                c.scale(&power)
            })
            .collect();
        Self::new(target, coeffs)
    }

    /// Drops coefficients above `order` (no-op when already lower).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.coeffs.len());
        Self::new(self.weight, self.coeffs[..keep].to_vec())
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.weight != other.weight {
            return Err(SeriesError::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, RatFunc::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, RatFunc::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Self::new(self.weight, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.weight, self.coeffs.iter().map(RatFunc::neg).collect())
    }

    /// Multiplies every coefficient by `k ∈ ℚ(x)`.
    pub fn scale(&self, k: &RatFunc) -> Self {
        Self::new(self.weight, self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    /// Binomial convolution `(ab)_n = Σ_j C(n,j) a_j b_(n-j)`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let n_max = self.order();
        let binom = Binomials::new(n_max);
        let coeffs = (0..=n_max)
            .map(|n| {
                let mut acc = RatFunc::zero();
                for j in 0..=n {
                    let (a, b) = (&self.coeffs[j], &other.coeffs[n - j]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&scale_int(&a.mul(b), &binom.get(n, j)));
                }
                acc
            })
            .collect();
        Ok(Self::new(self.weight, coeffs))
    }

    /// `1/a` by forward substitution in the convolution identity.
    pub fn inverse_mul(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .inv()
            .map_err(|_| SeriesError::NonUnitConstantTerm)?;
        let n_max = self.order();
        let binom = Binomials::new(n_max);
        let mut out: Vec<RatFunc> = Vec::with_capacity(n_max + 1);
        out.push(inv0.clone());
        for n in 1..=n_max {
            let mut acc = RatFunc::zero();
            for j in 1..=n {
                let a = &self.coeffs[j];
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&scale_int(&a.mul(&out[n - j]), &binom.get(n, j)));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Self::new(self.weight, out))
    }

    /// `d/dt`; in coefficients `(∂a)_n = a_(n+1) / w`. The order drops by one.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::OrderTooLow {
                needed: 1,
                order: 0,
            });
        }
        let inv_w = Rational::new(BigInt::one(), self.weight.factor().into());
        let coeffs = self.coeffs[1..].iter().map(|c| c.scale(&inv_w)).collect();
        Ok(Self::new(self.weight, coeffs))
    }

    /// `exp(a)` for `a_0 = 0`, from `(e^a)' = a' e^a`:
    /// `b_(n+1) = Σ_j C(n,j) a_(j+1) b_(n-j)`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::BadConstantTerm { expected: "0" });
        }
        let n_max = self.order();
        let binom = Binomials::new(n_max);
        let mut b = Vec::with_capacity(n_max + 1);
        b.push(RatFunc::one());
        for n in 0..n_max {
            let mut acc = RatFunc::zero();
            for j in 0..=n {
                let a = &self.coeffs[j + 1];
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&scale_int(&a.mul(&b[n - j]), &binom.get(n, j)));
            }
            b.push(acc);
        }
        Ok(Self::new(self.weight, b))
    }

    /// `log(b)` for `b_0 = 1`, the inverse of [`Egf::exp`].
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm { expected: "1" });
        }
        let b = &self.coeffs;
        let n_max = self.order();
        let binom = Binomials::new(n_max);
        let mut a = Vec::with_capacity(n_max + 1);
        a.push(RatFunc::zero());
        for n in 0..n_max {
            let mut acc = b[n + 1].clone();
            for j in 0..n {
                let aj: &RatFunc = &a[j + 1];
                if aj.is_zero() || b[n - j].is_zero() {
                    continue;
                }
                acc = acc.sub(&scale_int(&aj.mul(&b[n - j]), &binom.get(n, j)));
            }
            a.push(acc);
        }
        Ok(Self::new(self.weight, a))
    }

    /// `a^e = exp(e log a)` for `a_0 = 1`.
    pub fn pow(&self, e: &RatFunc) -> Result<Self, SeriesError> {
        self.log()?.scale(e).exp()
    }

    /// `G(F(t))` with `h_n = Σ_k g_k w^(n-k) Bell_(n,k)(f_1, f_2, …)`, where
    /// `w` is the weight of `G`. The inner series must be of weight 1 with
    /// zero constant term; the result has the weight of `G`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        check_inner(self, inner)?;
        let n_max = self.order();
        let table = BellTable::new(&inner.coeffs[1..], n_max);
        let w = BigInt::from(self.weight.factor());
        let coeffs = (0..=n_max)
            .map(|n| {
                let mut acc = RatFunc::zero();
                for (k, g) in self.coeffs.iter().enumerate().take(n + 1) {
                    let bell = table.get(n, k);
                    if g.is_zero() || bell.is_zero() {
                        continue;
                    }
                    let factor = num_traits::pow(w.clone(), n - k);
                    acc = acc.add(&scale_int(&g.mul(&bell), &factor));
                }
                acc
            })
            .collect();
        Ok(Self::new(self.weight, coeffs))
    }

    /// Composition by Horner's rule on the ordinary coefficients of `G`,
    /// using only series multiplication. Same contract as
    /// [`Egf::compose`].
    pub fn compose_horner(&self, inner: &Self) -> Result<Self, SeriesError> {
        check_inner(self, inner)?;
        let ordinary = self.to_ordinary();
        let order = self.order();
        let mut acc = Self::constant(Weight::A, order, ordinary[order].clone());
        for g in ordinary[..order].iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(g);
        }
        Ok(acc.reweight(self.weight))
    }

    /// The series `G` with `G(F(t)) = t`, by triangular solve:
    /// `g_1 = 1/f_1`, `g_n = -f_1^(-n) Σ_(k<n) g_k Bell_(n,k)(f)`.
    pub fn compositional_inverse(&self) -> Result<Self, SeriesError> {
        let (table, inv1) = self.inversion_setup()?;
        let n_max = self.order();
        let mut g = vec![RatFunc::zero(); n_max + 1];
        let mut inv_pow = RatFunc::one();
        for n in 1..=n_max {
            inv_pow = inv_pow.mul(&inv1);
            let mut acc = if n == 1 {
                RatFunc::one()
            } else {
                RatFunc::zero()
            };
            for k in 1..n {
                let bell = table.get(n, k);
                if g[k].is_zero() || bell.is_zero() {
                    continue;
                }
                acc = acc.sub(&g[k].mul(&bell));
            }
            g[n] = acc.mul(&inv_pow);
        }
        Ok(Self::new(Weight::A, g))
    }

    /// Compositional inverse by the closed Bell-polynomial form
    /// `g_n = f_1^(-n) Σ_(k=0)^(n-1) Bell_(n+k-1,k)(0, -f_2/f_1, -f_3/f_1, …)`.
    ///
    /// The `k = 0` term is `Bell_(n-1,0) = [n = 1]`, which supplies
    /// `g_1 = 1/f_1`; starting the sum at `k = 1` would leave `g_1 = 0`.
    pub fn lagrange_inverse_bell(&self) -> Result<Self, SeriesError> {
        let (_, inv1) = self.inversion_setup()?;
        let n_max = self.order();
        let mut args = vec![RatFunc::zero()];
        args.extend(self.coeffs[2..].iter().map(|f| f.mul(&inv1).neg()));
        let table = BellTable::new(&args, (2 * n_max).saturating_sub(2));
        let mut g = vec![RatFunc::zero(); n_max + 1];
        let mut inv_pow = RatFunc::one();
        for n in 1..=n_max {
            inv_pow = inv_pow.mul(&inv1);
            let mut acc = RatFunc::zero();
            for k in 0..n {
                acc = acc.add(&table.get(n + k - 1, k));
            }
            g[n] = acc.mul(&inv_pow);
        }
        Ok(Self::new(Weight::A, g))
    }

    fn inversion_setup(&self) -> Result<(BellTable<RatFunc>, RatFunc), SeriesError> {
        if self.weight != Weight::A {
            return Err(SeriesError::WeightMismatch {
                left: self.weight,
                right: Weight::A,
            });
        }
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let f1 = self.coeffs.get(1).ok_or(SeriesError::OrderTooLow {
            needed: 1,
            order: 0,
        })?;
        let inv1 = f1.inv().map_err(|_| SeriesError::NotInvertible)?;
        Ok((BellTable::new(&self.coeffs[1..], self.order()), inv1))
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

fn check_inner(outer: &Egf, inner: &Egf) -> Result<(), SeriesError> {
    if inner.weight != Weight::A {
        return Err(SeriesError::WeightMismatch {
            left: inner.weight,
            right: Weight::A,
        });
    }
    if outer.order() != inner.order() {
        return Err(SeriesError::OrderMismatch {
            left: outer.order(),
            right: inner.order(),
        });
    }
    if !inner.coeffs[0].is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    Ok(())
}

fn scale_int(c: &RatFunc, k: &BigInt) -> RatFunc {
    if k.is_one() {
        c.clone()
    } else {
        c.scale(&Rational::from_integer(k.clone()))
    }
}

impl fmt::Debug for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Egf")
            .field("weight", &self.weight)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}
