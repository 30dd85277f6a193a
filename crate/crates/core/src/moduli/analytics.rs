use num_bigint::BigInt;
use rayon::prelude::*;

use super::{compute_a_keel, compute_b_quadratic, Kind, PoincareTable};
use crate::arith::{gamma_decompose, is_real_rooted, rat, ArithError, Poly};
use crate::comb::Binomials;

/// `γ(P_n)` for every entry, palindromic about `n-2` (A) or `n-1` (B),
/// clamped at zero for the constant entries below that range.
pub fn gamma_table(table: &PoincareTable) -> Result<Vec<Poly>, ArithError> {
    table
        .polys()
        .iter()
        .enumerate()
        .map(|(n, p)| Ok(gamma_decompose(p, table.kind().center_times_two(n))?.gamma_poly()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRecursionReport {
    /// The `n` for which `γ^B_(n+1)` was recomputed.
    pub checked: Vec<usize>,
    /// The `n` at which the recomputed `γ^B_(n+1)` disagrees.
    pub violations: Vec<usize>,
}

impl GammaRecursionReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for `1 ≤ n < max_n`,
/// `γ^B_(n+1) = γ^B_n + x Σ_(j=1)^(n-1) C(n,j) γ^B_j γ^B_(n-j)
///            + x Σ_(j=2)^n C(n,j) 2^j γ^A_j γ^B_(n+1-j)`.
pub fn check_gamma_recursion(max_n: usize) -> Result<GammaRecursionReport, ArithError> {
    let ga = gamma_table(&compute_a_keel(max_n))?;
    let gb = gamma_table(&compute_b_quadratic(max_n))?;
    let binom = Binomials::new(max_n);
    let mut report = GammaRecursionReport {
        checked: Vec::new(),
        violations: Vec::new(),
    };
    for n in 1..max_n {
        let mut sum = Poly::zero();
        for j in 1..n {
            sum += &(&gb[j] * &gb[n - j]).scale_int(&binom.get(n, j));
        }
        for j in 2..=n {
            sum += &(&ga[j] * &gb[n + 1 - j]).scale_int(&(binom.get(n, j) << j));
        }
        let rhs = &gb[n] + &sum.shift(1);
        report.checked.push(n);
        if rhs != gb[n + 1] {
            report.violations.push(n);
        }
    }
    Ok(report)
}

fn value_at_one(p: &Poly) -> BigInt {
    p.eval(&rat(1)).to_integer()
}

/// `A_n(1)`, the total dimension of the cohomology of `M̄_(0,n+1)`.
pub fn dims_a(a: &PoincareTable) -> Vec<BigInt> {
    debug_assert_eq!(a.kind(), Kind::A);
    a.polys().iter().map(value_at_one).collect()
}

/// `b_0 = 1`, `b_n = 2ⁿ A_n(1) - n b_(n-1)`.
pub fn dims_b_recursive(a: &PoincareTable) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    for (n, a_one) in dims_a(a).into_iter().enumerate().skip(1) {
        let next = (a_one << n) - BigInt::from(n) * &out[n - 1];
        out.push(next);
    }
    out
}

/// `B_n(1)`.
pub fn dims_b_by_evaluation(b: &PoincareTable) -> Vec<BigInt> {
    debug_assert_eq!(b.kind(), Kind::B);
    b.polys().iter().map(value_at_one).collect()
}

/// `(n, real-rooted?)` for every `n ≥ from`, checked in parallel.
pub fn real_rootedness(table: &PoincareTable, from: usize) -> Vec<(usize, bool)> {
    table
        .polys()
        .par_iter()
        .enumerate()
        .skip(from)
        .map(|(n, p)| (n, is_real_rooted(p)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c.iter().copied())
    }

    #[test]
    fn printed_gamma_values() {
        let g = gamma_table(&compute_b_quadratic(9)).unwrap();
        assert_eq!(g[1], p(&[1]));
        assert_eq!(g[2], p(&[1]));
        assert_eq!(g[3], p(&[1, 6]));
        assert_eq!(g[6], p(&[1, 380, 3096]));
        assert_eq!(g[8], p(&[1, 3456, 164320, 599808]));
        assert_eq!(g[9], p(&[1, 10254, 968224, 8491968, 5080320]));
    }

    #[test]
    fn gamma_recursion_holds() {
        let r = check_gamma_recursion(12).unwrap();
        assert!(r.holds());
        assert_eq!(r.checked, (1..12).collect::<Vec<_>>());
        assert!(check_gamma_recursion(1).unwrap().checked.is_empty());
    }

    #[test]
    fn dimensions() {
        let want: Vec<BigInt> = [1, 1, 2, 10, 72, 728, 9264, 143792]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(dims_b_recursive(&compute_a_keel(7)), want);
        assert_eq!(dims_b_by_evaluation(&compute_b_quadratic(7)), want);
    }

    #[test]
    fn small_b_are_real_rooted() {
        let rr = real_rootedness(&compute_b_quadratic(15), 1);
        assert_eq!(rr.len(), 15);
        assert!(rr.iter().all(|&(_, ok)| ok));
    }
}
