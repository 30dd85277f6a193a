use num_bigint::BigInt;
use num_traits::One;

use super::{Binomials, CombError};
use crate::arith::{ArithError, RatFunc, Ring};

/// All partial Bell polynomials `Bell_{n,k}(y_1, y_2, …)` for `n ≤ max_n`,
/// filled by the recurrence
/// `Bell_{n,k} = Σ_j C(n-1, j-1) y_j Bell_{n-j,k-1}`.
///
/// Arguments past the end of `args` are treated as zero; an entry
/// `Bell_{n,k}` is exact whenever `args` covers `y_1 … y_(n-k+1)`.
#[derive(Debug, Clone)]
pub struct BellTable<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> BellTable<T> {
    /// `args[j - 1]` is `y_j`.
    pub fn new(args: &[T], max_n: usize) -> Self {
        let binom = Binomials::new(max_n.max(1));
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![T::one()]);
        for n in 1..=max_n {
            let mut row = vec![T::zero(); n + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let mut acc = T::zero();
                for j in 1..=(n - k + 1).min(args.len()) {
                    let prev = &rows[n - j][k - 1];
                    if prev.is_zero() || args[j - 1].is_zero() {
                        continue;
                    }
                    let term = args[j - 1].mul_ref(prev);
                    let c = binom.get(n - 1, j - 1);
                    acc = acc.add_ref(&if c.is_one() { term } else { term.scale_int(&c) });
                }
                *slot = acc;
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `Bell_{n,k}`; zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> T {
        self.rows[n].get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }
}

/// The partial Bell polynomial `Bell_{n,k}` evaluated at `args`
/// (`args[j - 1] = y_j`).
pub fn bell_polynomial<T: Ring>(n: usize, k: usize, args: &[T]) -> Result<T, CombError> {
    let needed = if k == 0 { 0 } else { n.saturating_sub(k) + 1 };
    if k > n || args.len() < needed {
        return Err(CombError::BadIndex {
            n,
            k,
            needed,
            given: args.len(),
        });
    }
    Ok(BellTable::new(&args[..needed], n).get(n, k))
}

/// Coefficients of `1/F` for an exponential generating function
/// `F = Σ f_n t^n/n!` with `f_0 ≠ 0`:
///
/// `g_n = (1/f_0) Σ_k (-1)^k k! Bell_{n,k}(f_1/f_0, f_2/f_0, …)`,
///
/// also in exponential normalization. This follows from composing
/// `1/(f_0 + s)` with `F - f_0`.
pub fn bell_reciprocal(f: &[RatFunc]) -> Result<Vec<RatFunc>, ArithError> {
    let Some(f0) = f.first() else {
        return Ok(Vec::new());
    };
    let inv0 = f0.inv()?;
    let scaled: Vec<RatFunc> = f[1..].iter().map(|c| c.mul(&inv0)).collect();
    let order = f.len() - 1;
    let table = BellTable::new(&scaled, order);
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = RatFunc::zero();
        let mut fact = BigInt::one();
        for k in 0..=n {
            if k > 0 {
                fact *= BigInt::from(k);
            }
            let term = table.get(n, k).scale_int(&fact);
            acc = if k % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        out.push(acc.mul(&inv0));
    }
    Ok(out)
}
