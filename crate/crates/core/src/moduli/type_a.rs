use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Kind, Method, PoincareTable};
use crate::arith::{IntPoly, Poly};
use crate::comb::{Binomials, StirlingTable};

pub(crate) fn to_polys(v: Vec<IntPoly>) -> Vec<Poly> {
    v.into_iter().map(Poly::from).collect()
}

/// `A_n = A_(n-1) + x Σ_(j=2)^(n-1) C(n-1, j) A_j A_(n-j)` with
/// `A_0 = A_1 = 1`.
pub fn compute_a_keel(max_n: usize) -> PoincareTable {
    let binom = Binomials::new(max_n.max(1));
    let mut a = vec![IntPoly::one(); max_n.min(1) + 1];
    for n in 2..=max_n {
        let mut sum = IntPoly::zero();
        for j in 2..n {
            sum += &(&a[j] * &a[n - j]).scale(&binom.get(n - 1, j));
        }
        let next = &a[n - 1] + &sum.shift(1);
        a.push(next);
    }
    PoincareTable::uniform(Kind::A, Method::Keel, to_polys(a))
}

/// `A_n = (1+x) A_(n-1) + (x/2) Σ_(j=2)^(n-2) C(n, j) A_j A_(n-j)` for
/// `n ≥ 3`, seeded with `A_0 = A_1 = A_2 = 1`.
pub fn compute_a_manin(max_n: usize) -> PoincareTable {
    let binom = Binomials::new(max_n.max(2));
    let one_plus_x = IntPoly::from_ints([1, 1]);
    let two = BigInt::from(2);
    let mut a = vec![IntPoly::one(); max_n.min(2) + 1];
    for n in 3..=max_n {
        let mut sum = IntPoly::zero();
        for j in 2..=n - 2 {
            sum += &(&a[j] * &a[n - j]).scale(&binom.get(n, j));
        }
        let next = &(&one_plus_x * &a[n - 1]) + &sum.div_exact_int(&two).shift(1);
        a.push(next);
    }
    PoincareTable::uniform(Kind::A, Method::Manin, to_polys(a))
}

/// `A_n = (1-x)^n Σ_(k,j) s(k+n, k+n-j) S(k+n-j, k+1) x^(k+j)`.
///
/// The double sum is an infinite series in `x`; only its terms of total
/// degree at most `n-2` can reach `A_n`, so it is truncated there. The
/// formula gives `0` at `n = 0`, where `A_0 = 1` is seeded.
pub fn compute_a_stirling(max_n: usize) -> PoincareTable {
    let stirling = StirlingTable::new(2 * max_n);
    let mut a = vec![Poly::one()];
    for n in 1..=max_n {
        let d = n.saturating_sub(2);
        let mut series = vec![BigInt::zero(); d + 1];
        for (m, slot) in series.iter_mut().enumerate() {
            for k in 0..=m {
                let j = m - k;
                *slot += stirling.first(k + n, k + n - j) * stirling.second(k + n - j, k + 1);
            }
        }
        // (1-x)^n, truncated to degree d
        let mut one_minus_x = vec![BigInt::one()];
        for i in 1..=d.min(n) {
            let prev = one_minus_x[i - 1].clone();
            one_minus_x.push(-prev * BigInt::from(n - i + 1) / BigInt::from(i));
        }
        let coeffs: Vec<BigInt> = (0..=d)
            .map(|m| {
                (0..=m.min(one_minus_x.len() - 1))
                    .map(|i| &one_minus_x[i] * &series[m - i])
                    .sum()
            })
            .collect();
        a.push(Poly::from_ints(coeffs));
    }
    PoincareTable::uniform(Kind::A, Method::StirlingClosed, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c.iter().copied())
    }

    #[test]
    fn printed_values() {
        let keel = compute_a_keel(6);
        assert_eq!(keel.get(2), Some(&p(&[1])));
        assert_eq!(keel.get(3), Some(&p(&[1, 1])));
        assert_eq!(keel.get(4), Some(&p(&[1, 5, 1])));
        assert_eq!(keel.get(5), Some(&p(&[1, 16, 16, 1])));
        assert_eq!(keel.get(6), Some(&p(&[1, 42, 127, 42, 1])));
    }

    #[test]
    fn small_tables() {
        assert_eq!(compute_a_keel(0).polys(), &[Poly::one()]);
        assert_eq!(compute_a_manin(1).polys(), &[Poly::one(), Poly::one()]);
        assert_eq!(
            compute_a_stirling(2).polys(),
            &[Poly::one(), Poly::one(), Poly::one()]
        );
    }

    #[test]
    fn routes_agree() {
        let keel = compute_a_keel(25);
        assert_eq!(compute_a_manin(25).polys(), keel.polys());
        assert_eq!(compute_a_stirling(25).polys(), keel.polys());
        assert!(keel.invariant_violations().is_empty());
        assert_eq!(
            compute_a_stirling(4).provenance(4),
            Some(Method::StirlingClosed)
        );
    }
}
