use num_traits::{Signed, Zero};

use super::{ArithError, Poly, Rational};

/// `p(x) = Σ γ_i x^i (1+x)^(d-2i)` for a polynomial palindromic about `d/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaDecomposition {
    /// `d`, so the center of symmetry is `d/2`.
    pub center_times_two: usize,
    /// `γ_0 ..= γ_⌊d/2⌋`.
    pub gamma_coeffs: Vec<Rational>,
}

impl GammaDecomposition {
    /// The γ-polynomial `Σ γ_i x^i`.
    pub fn gamma_poly(&self) -> Poly {
        Poly::from_coeffs(self.gamma_coeffs.clone())
    }

    /// Rebuilds `Σ γ_i x^i (1+x)^(d-2i)`.
    pub fn reassemble(&self) -> Poly {
        let d = self.center_times_two;
        let mut acc = Poly::zero();
        for (i, g) in self.gamma_coeffs.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            acc += &Poly::one_plus_x_pow(d - 2 * i).scale(g).shift(i);
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gamma_coeffs.iter().all(|g| !g.is_negative())
    }
}

/// True iff `p(x) = x^d p(1/x)`. A polynomial of degree above `d` is never
/// palindromic about `d/2`.
pub fn is_palindromic(p: &Poly, d: usize) -> bool {
    if p.degree().is_some_and(|deg| deg > d) {
        return false;
    }
    (0..=d / 2).all(|i| p.coeff(i) == p.coeff(d - i))
}

/// γ-coefficients of a palindromic polynomial, peeled off from the low end:
/// after removing `γ_0 … γ_(i-1)` terms, the lowest surviving coefficient
/// is `γ_i`.
pub fn gamma_decompose(p: &Poly, d: usize) -> Result<GammaDecomposition, ArithError> {
    if !is_palindromic(p, d) {
        return Err(ArithError::NotPalindromic { d });
    }
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest -= &Poly::one_plus_x_pow(d - 2 * i).scale(&g).shift(i);
        }
        gamma.push(g);
    }
    debug_assert!(rest.is_zero(), "palindromic input leaves no remainder");
    Ok(GammaDecomposition {
        center_times_two: d,
        gamma_coeffs: gamma,
    })
}

pub fn is_gamma_positive(p: &Poly, d: usize) -> Result<bool, ArithError> {
    Ok(gamma_decompose(p, d)?.is_nonnegative())
}

/// Coefficients weakly increase and then weakly decrease.
pub fn is_unimodal(p: &Poly) -> bool {
    let c = p.coeffs();
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}
