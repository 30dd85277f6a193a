use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;

/// Signed Stirling numbers of the first kind and Stirling numbers of the
/// second kind for all `n ≤ max_n`.
///
/// There is no shared memo: each table is owned and immutable once built,
/// so concurrent callers each build (or share by reference) their own.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    first: Vec<Vec<BigInt>>,
    second: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut first = vec![vec![BigInt::one()]];
        let mut second = vec![vec![BigInt::one()]];
        for n in 0..max_n {
            let mut f = vec![BigInt::zero(); n + 2];
            let mut s = vec![BigInt::zero(); n + 2];
            let nn = BigInt::from(n);
            for k in 1..=n + 1 {
                // s(n+1, k) = s(n, k-1) - n s(n, k)
                let keep = first[n].get(k).map(|c| &nn * c).unwrap_or_default();
                f[k] = &first[n][k - 1] - keep;
                // S(n+1, k) = k S(n, k) + S(n, k-1)
                let kk = BigInt::from(k);
                let stay = second[n].get(k).map(|c| &kk * c).unwrap_or_default();
                s[k] = &second[n][k - 1] + stay;
            }
            first.push(f);
            second.push(s);
        }
        Self { first, second }
    }

    /// `s(n, k)`, with `Σ_k s(n,k) x^k = x(x-1)…(x-n+1)`.
    pub fn first(&self, n: usize, k: usize) -> BigInt {
        self.first[n].get(k).cloned().unwrap_or_default()
    }

    /// `S(n, k)`, the number of partitions of an `n`-set into `k` blocks.
    pub fn second(&self, n: usize, k: usize) -> BigInt {
        self.second[n].get(k).cloned().unwrap_or_default()
    }

    pub fn max_n(&self) -> usize {
        self.first.len() - 1
    }
}

pub fn stirling_first(n: usize, k: usize) -> Rational {
    Rational::from_integer(StirlingTable::new(n).first(n, k))
}

pub fn stirling_second(n: usize, k: usize) -> Rational {
    Rational::from_integer(StirlingTable::new(n).second(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly};

    #[test]
    fn small_values() {
        assert_eq!(stirling_first(4, 2), rat(11));
        assert_eq!(stirling_first(4, 3), rat(-6));
        assert_eq!(stirling_second(4, 2), rat(7));
        for n in 0..10 {
            assert_eq!(stirling_first(n, n), rat(1));
            assert_eq!(stirling_second(n, n), rat(1));
        }
        assert_eq!(stirling_second(3, 0), rat(0));
        assert_eq!(stirling_first(0, 0), rat(1));
    }

    #[test]
    fn first_kind_is_falling_factorial() {
        let t = StirlingTable::new(12);
        for n in 0..=12usize {
            let mut expected = Poly::one();
            for i in 0..n {
                expected = &expected * &Poly::from_ints([-(i as i64), 1]);
            }
            let got = Poly::from_ints((0..=n).map(|k| t.first(n, k)));
            assert_eq!(got, expected, "n = {n}");
            for m in 0..=n {
                let falling: i64 = (0..n as i64).map(|i| m as i64 - i).product();
                assert_eq!(got.eval(&rat(m as i64)), rat(falling));
            }
        }
    }
}
