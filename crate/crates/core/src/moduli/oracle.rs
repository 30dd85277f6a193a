//! Brute-force evaluation of the Chow-polynomial sum over the signed
//! partition lattice, and `B_n` solved from it.
//!
//! For `n ≥ 1` the sum
//! `Σ_j C(n,j) B_j Σ_(σ ⊢ [n-j]) 2^(n-j-ℓ(σ)) Π A_|σ_i| χ̄^B_ℓ(σ)`
//! vanishes. Its `j = n` term is `B_n χ̄^B_0 = -B_n`, so `B_n` equals the
//! sum of the remaining terms.

use num_bigint::BigInt;

use super::{compute_a_keel, Kind, Method, ModuliError, PoincareTable};
use crate::arith::Poly;
use crate::comb::{
    binomial, enumerate_set_partitions, enumerate_signed_partitions, reduced_char_poly_b,
    CombError, EnumerationLimits,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    /// Zero block chosen by a binomial, the rest by set partitions with
    /// `2^(m-ℓ)` sign choices folded into a weight.
    #[default]
    SetPartitions,
    /// Every signed partition of `⟨n⟩` visited individually.
    SignedPartitions,
}

/// `Σ_(σ ⊢ [m]) 2^(m-ℓ(σ)) Π A_|σ_i| χ̄^B_ℓ(σ)`; equals `χ̄^B_0 = -1` at `m = 0`.
fn inner_sum(m: usize, a: &[Poly], limits: &EnumerationLimits) -> Result<Poly, CombError> {
    let mut acc = Poly::zero();
    for sigma in enumerate_set_partitions(m, limits)? {
        let ell = sigma.blocks.len();
        let mut term = reduced_char_poly_b(ell).scale_int(&(BigInt::from(1) << (m - ell)));
        for block in &sigma.blocks {
            term = &term * &a[block.len()];
        }
        acc += &term;
    }
    Ok(acc)
}

fn check_inputs(
    n: usize,
    b_len: usize,
    a_len: usize,
    limits: &EnumerationLimits,
) -> Result<(), CombError> {
    if n > limits.signed_partitions {
        return Err(CombError::LimitExceeded {
            n,
            limit: limits.signed_partitions,
        });
    }
    assert!(b_len >= n, "B_0 .. B_(n-1) are required");
    assert!(a_len > n, "A_0 .. A_n are required");
    Ok(())
}

/// `B_n` from the Chow-sum identity, given `b[j] = B_j` for `j < n` and
/// `a[j] = A_j` for `j ≤ n`.
pub fn compute_b_oracle(
    n: usize,
    b: &[Poly],
    a: &[Poly],
    mode: OracleMode,
    limits: &EnumerationLimits,
) -> Result<Poly, ModuliError> {
    check_inputs(n, b.len(), a.len(), limits)?;
    if n == 0 {
        return Ok(Poly::one());
    }
    match mode {
        OracleMode::SetPartitions => {
            let mut acc = Poly::zero();
            for j in 0..n {
                let inner = inner_sum(n - j, a, limits)?;
                acc += &(&b[j] * &inner).scale_int(&binomial(n, j));
            }
            Ok(acc)
        }
        OracleMode::SignedPartitions => {
            let mut acc = Poly::zero();
            for pi in enumerate_signed_partitions(n, limits)? {
                let z = pi.zero_size();
                if z == n {
                    continue;
                }
                let mut term = &b[z] * &reduced_char_poly_b(pi.ell());
                for block in &pi.pairs {
                    term = &term * &a[block.len()];
                }
                acc += &term;
            }
            Ok(acc)
        }
    }
}

/// `B_0 … B_max_n`, each solved from the identity using the earlier
/// oracle values.
pub fn compute_b_oracle_table(
    max_n: usize,
    mode: OracleMode,
    limits: &EnumerationLimits,
) -> Result<PoincareTable, ModuliError> {
    let a = compute_a_keel(max_n).into_polys();
    let mut b = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let next = compute_b_oracle(n, &b, &a, mode, limits)?;
        b.push(next);
    }
    Ok(PoincareTable::uniform(Kind::B, Method::Oracle, b))
}

/// The full Chow sum `Σ_(j=0)^n C(n,j) B_j Σ_(σ ⊢ [n-j]) 2^(n-j-ℓ) Π A χ̄^B_ℓ`,
/// including the `j = n` term. Needs `b[j]` and `a[j]` for `j ≤ n`.
pub fn chow_sum_value(
    n: usize,
    b: &[Poly],
    a: &[Poly],
    limits: &EnumerationLimits,
) -> Result<Poly, ModuliError> {
    check_inputs(n, b.len(), a.len(), limits)?;
    assert!(b.len() > n, "B_n is required");
    let mut acc = Poly::zero();
    for j in 0..=n {
        let inner = inner_sum(n - j, a, limits)?;
        acc += &(&b[j] * &inner).scale_int(&binomial(n, j));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moduli::compute_b_quadratic;

    #[test]
    fn oracle_matches_recursion() {
        let limits = EnumerationLimits::default();
        let q = compute_b_quadratic(6);
        for mode in [OracleMode::SetPartitions, OracleMode::SignedPartitions] {
            let t = compute_b_oracle_table(6, mode, &limits).unwrap();
            assert_eq!(t.polys(), q.polys(), "{mode:?}");
        }
    }

    #[test]
    fn chow_sum_vanishes() {
        let limits = EnumerationLimits::default();
        let a = compute_a_keel(6).into_polys();
        let b = compute_b_quadratic(6).into_polys();
        assert_eq!(
            chow_sum_value(0, &b, &a, &limits).unwrap(),
            Poly::from_ints([-1])
        );
        for n in 1..=6 {
            assert!(
                chow_sum_value(n, &b, &a, &limits).unwrap().is_zero(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn limit_is_enforced() {
        let limits = EnumerationLimits {
            set_partitions: 12,
            signed_partitions: 3,
        };
        assert!(matches!(
            compute_b_oracle_table(4, OracleMode::SetPartitions, &limits),
            Err(ModuliError::Comb(CombError::LimitExceeded {
                n: 4,
                limit: 3
            }))
        ));
    }
}
