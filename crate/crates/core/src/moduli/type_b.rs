use num_bigint::BigInt;

use super::type_a::to_polys;
use super::{compute_a_keel, Kind, Method, ModuliError, PoincareTable};
use crate::arith::{ratio, IntPoly, Poly, RatFunc};
use crate::comb::{factorial, reduced_char_poly_b, BellTable, Binomials};
use crate::series::{Egf, Weight};

fn a_polys(max_n: usize) -> Vec<Poly> {
    compute_a_keel(max_n).into_polys()
}

fn a_intpolys(max_n: usize) -> Vec<IntPoly> {
    a_polys(max_n)
        .iter()
        .map(|p| IntPoly::from_poly(p).expect("A_n has integer coefficients"))
        .collect()
}

/// `B_(n+1) = B_n + x Σ_(j=1)^n C(n,j) B_j B_(n-j)
///           + x Σ_(j=2)^n C(n,j) 2^j A_j B_(n+1-j)`, `B_0 = 1`.
pub fn compute_b_quadratic(max_n: usize) -> PoincareTable {
    let a = a_intpolys(max_n);
    let binom = Binomials::new(max_n);
    let mut b = vec![IntPoly::one()];
    for n in 0..max_n {
        let mut sum = IntPoly::zero();
        for j in 1..=n {
            sum += &(&b[j] * &b[n - j]).scale(&binom.get(n, j));
        }
        for j in 2..=n {
            let c = binom.get(n, j) << j;
            sum += &(&a[j] * &b[n + 1 - j]).scale(&c);
        }
        let next = &b[n] + &sum.shift(1);
        b.push(next);
    }
    PoincareTable::uniform(Kind::B, Method::QuadraticB, to_polys(b))
}

/// `B_n = Σ_k 2^(n-k) r_k Bell_(n,k)(A_1, A_2, …)` where
/// `r_k = Σ_ℓ ℓ! Bell_(k,ℓ)(χ̄^B_1, χ̄^B_2, …)`.
///
/// `r_k` are the coefficients of `-1/χ̄^B(t)`: the reciprocal-series
/// formula with `f_0 = χ̄^B_0 = -1` turns `(1/f_0)(-1)^ℓ Bell_(k,ℓ)(f_i/f_0)`
/// into `-Bell_(k,ℓ)(χ̄^B_i)`, and the outer sign cancels. The `ℓ = 0`
/// term only survives at `k = 0`, giving `r_0 = 1 = B_0`.
pub fn compute_b_bell_iterative(max_n: usize) -> PoincareTable {
    let a = a_intpolys(max_n);
    let chi: Vec<IntPoly> = (1..=max_n)
        .map(|n| IntPoly::from_poly(&reduced_char_poly_b(n)).expect("integral"))
        .collect();
    let chi_bell = BellTable::new(&chi, max_n);
    let r: Vec<IntPoly> = (0..=max_n)
        .map(|k| {
            let mut acc = IntPoly::zero();
            for l in 0..=k {
                acc += &chi_bell.get(k, l).scale(&factorial(l));
            }
            acc
        })
        .collect();
    let a_bell = BellTable::new(&a[1..], max_n);
    let b = (0..=max_n)
        .map(|n| {
            if n == 0 {
                return r[0].clone();
            }
            let mut acc = IntPoly::zero();
            for k in 1..=n {
                let c = BigInt::from(1) << (n - k);
                acc += &(&r[k] * &a_bell.get(n, k)).scale(&c);
            }
            acc
        })
        .collect();
    PoincareTable::uniform(Kind::B, Method::BellIterative, to_polys(b))
}

fn a_egf(max_n: usize) -> Egf {
    Egf::from_polys(Weight::A, a_polys(max_n))
}

fn half_shift(c: i64) -> RatFunc {
    RatFunc::from_poly(Poly::from_coeffs(vec![ratio(c, 2), ratio(1, 2)]))
}

fn extract(series: Egf) -> Result<PoincareTable, ModuliError> {
    let polys = series.reweight(Weight::B).to_polys()?;
    Ok(PoincareTable::uniform(
        Kind::B,
        Method::SeriesExtraction,
        polys,
    ))
}

/// Coefficients of `B = (1-x) / (A^((x-1)/2) - x)` as a series in `t`.
pub fn compute_b_series(max_n: usize) -> Result<PoincareTable, ModuliError> {
    let a = a_egf(max_n);
    let one_minus_x = RatFunc::from_poly(Poly::from_ints([1, -1]));
    let denom = a
        .pow(&half_shift(-1))?
        .sub(&Egf::constant(Weight::A, max_n, RatFunc::x()))?;
    extract(denom.inverse_mul()?.scale(&one_minus_x))
}

/// Coefficients of `B = (A^((x+1)/2) + xA) / (1 + x + xt)`.
pub fn compute_b_series_second_form(max_n: usize) -> Result<PoincareTable, ModuliError> {
    let a = a_egf(max_n);
    let x = RatFunc::x();
    let numer = a.pow(&half_shift(1))?.add(&a.scale(&x))?;
    let denom = Egf::constant(
        Weight::A,
        max_n,
        RatFunc::from_poly(Poly::from_ints([1, 1])),
    )
    .add(&Egf::t(Weight::A, max_n).scale(&x))?;
    extract(numer.mul(&denom.inverse_mul()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c.iter().copied())
    }

    fn printed() -> Vec<Poly> {
        vec![
            p(&[1]),
            p(&[1]),
            p(&[1, 1]),
            p(&[1, 8, 1]),
            p(&[1, 35, 35, 1]),
            p(&[1, 122, 482, 122, 1]),
        ]
    }

    #[test]
    fn quadratic_matches_printed_table() {
        assert_eq!(compute_b_quadratic(5).polys(), printed().as_slice());
    }

    #[test]
    fn bell_iterative_pins_conventions() {
        assert_eq!(compute_b_bell_iterative(5).polys(), printed().as_slice());
    }

    #[test]
    fn series_routes_match_printed_table() {
        assert_eq!(compute_b_series(5).unwrap().polys(), printed().as_slice());
        assert_eq!(
            compute_b_series_second_form(5).unwrap().polys(),
            printed().as_slice()
        );
        assert_eq!(compute_b_series(0).unwrap().polys(), &[Poly::one()]);
    }

    #[test]
    fn routes_agree_further_out() {
        let q = compute_b_quadratic(14);
        assert_eq!(compute_b_bell_iterative(14).polys(), q.polys());
        assert_eq!(compute_b_series(14).unwrap().polys(), q.polys());
        assert!(q.invariant_violations().is_empty());
    }
}
