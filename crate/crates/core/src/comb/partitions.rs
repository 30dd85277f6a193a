//! Set partitions of `[n]` and signed partitions of `⟨n⟩ = {±1, …, ±n}`.
//!
//! Set partitions are generated as restricted growth strings, so each
//! partition appears exactly once with blocks ordered by their least
//! element. Signed partitions are generated from the decomposition
//! zero-block support + set partition of the rest + one sign per
//! non-leading element of each block.

use super::CombError;

/// Size limits for the brute-force enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub set_partitions: usize,
    pub signed_partitions: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            set_partitions: 12,
            signed_partitions: 7,
        }
    }
}

/// A partition of `{1, …, n}` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Iterator over all set partitions of `[n]`.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    n: usize,
    // growth[i] = block index of element i+1; growth[0] = 0.
    growth: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    fn new(n: usize) -> Self {
        Self {
            n,
            growth: vec![0; n],
            done: false,
        }
    }

    fn current(&self) -> SetPartition {
        let count = self.growth.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in self.growth.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { n: self.n, blocks }
    }

    fn advance(&mut self) {
        // Rightmost position that may still grow: growth[i] <= max(prefix).
        for i in (1..self.n).rev() {
            let prefix_max = self.growth[..i].iter().copied().max().unwrap_or(0);
            if self.growth[i] <= prefix_max {
                self.growth[i] += 1;
                for g in &mut self.growth[i + 1..] {
                    *g = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

pub fn enumerate_set_partitions(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<SetPartitions, CombError> {
    if n > limits.set_partitions {
        return Err(CombError::LimitExceeded {
            n,
            limit: limits.set_partitions,
        });
    }
    Ok(SetPartitions::new(n))
}

/// A signed partition of `⟨n⟩`. Element `i` is written `i`, its conjugate
/// `ī` is written `-i`.
///
/// Only one block of each conjugate pair `{B, B̄}` is stored: the one in
/// which the least absolute value appears with a positive sign. The zero
/// block `Z = Z̄` is stored by its positive support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    pub n: usize,
    pub zero_block: Vec<usize>,
    pub pairs: Vec<Vec<i64>>,
}

impl SignedPartition {
    /// `ℓ(π)`, half the number of non-zero blocks.
    pub fn ell(&self) -> usize {
        self.pairs.len()
    }

    /// `|Z| / 2`.
    pub fn zero_size(&self) -> usize {
        self.zero_block.len()
    }

    /// Every block of the partition of `⟨n⟩`, conjugates included.
    pub fn all_blocks(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(2 * self.pairs.len() + 1);
        if !self.zero_block.is_empty() {
            let mut z: Vec<i64> = self.zero_block.iter().map(|&i| i as i64).collect();
            z.extend(self.zero_block.iter().map(|&i| -(i as i64)));
            out.push(z);
        }
        for b in &self.pairs {
            out.push(b.clone());
            out.push(b.iter().map(|&e| -e).collect());
        }
        out
    }

    /// Checks the structural invariants.
    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut mark = |i: usize| {
            if i == 0 || i > self.n || seen[i] {
                return false;
            }
            seen[i] = true;
            true
        };
        for &z in &self.zero_block {
            if !mark(z) {
                return false;
            }
        }
        for b in &self.pairs {
            if b.is_empty() {
                return false;
            }
            let lead = b.iter().min_by_key(|e| e.unsigned_abs()).copied();
            if lead.is_none_or(|e| e < 0) {
                return false;
            }
            for &e in b {
                if !mark(e.unsigned_abs() as usize) {
                    return false;
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// Iterator over all signed partitions of `⟨n⟩`.
#[derive(Debug, Clone)]
pub struct SignedPartitions {
    n: usize,
    zero_mask: u64,
    rest: Vec<usize>,
    inner: SetPartitions,
    current: Option<SetPartition>,
    sign_bits: u32,
    sign_mask: u64,
}

impl SignedPartitions {
    fn new(n: usize) -> Self {
        let mut it = Self {
            n,
            zero_mask: 0,
            rest: Vec::new(),
            inner: SetPartitions::new(0),
            current: None,
            sign_bits: 0,
            sign_mask: 0,
        };
        it.start_zero_mask();
        it
    }

    fn start_zero_mask(&mut self) {
        self.rest = (1..=self.n)
            .filter(|i| self.zero_mask & (1 << (i - 1)) == 0)
            .collect();
        self.inner = SetPartitions::new(self.rest.len());
        self.load_partition();
    }

    fn load_partition(&mut self) {
        self.current = self.inner.next();
        self.sign_mask = 0;
        self.sign_bits = self
            .current
            .as_ref()
            .map_or(0, |p| (self.rest.len() - p.blocks.len()) as u32);
    }

    fn build(&self, sigma: &SetPartition) -> SignedPartition {
        let zero_block = (1..=self.n)
            .filter(|i| self.zero_mask & (1 << (i - 1)) != 0)
            .collect();
        let mut bit = 0;
        let pairs = sigma
            .blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .enumerate()
                    .map(|(pos, &local)| {
                        let e = self.rest[local - 1] as i64;
                        if pos == 0 {
                            return e;
                        }
                        let negative = self.sign_mask & (1 << bit) != 0;
                        bit += 1;
                        if negative {
                            -e
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        SignedPartition {
            n: self.n,
            zero_block,
            pairs,
        }
    }
}

impl Iterator for SignedPartitions {
    type Item = SignedPartition;

    fn next(&mut self) -> Option<SignedPartition> {
        loop {
            if let Some(sigma) = &self.current {
                let out = self.build(sigma);
                self.sign_mask += 1;
                if self.sign_mask >> self.sign_bits != 0 {
                    self.load_partition();
                }
                return Some(out);
            }
            self.zero_mask += 1;
            if self.zero_mask >> self.n != 0 {
                return None;
            }
            self.start_zero_mask();
        }
    }
}

pub fn enumerate_signed_partitions(
    n: usize,
    limits: &EnumerationLimits,
) -> Result<SignedPartitions, CombError> {
    if n > limits.signed_partitions || n > 63 {
        return Err(CombError::LimitExceeded {
            n,
            limit: limits.signed_partitions,
        });
    }
    Ok(SignedPartitions::new(n))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn bell_numbers(max: usize) -> Vec<u64> {
        // Bell triangle
        let mut out = vec![1u64];
        let mut row = vec![1u64];
        for _ in 0..max {
            let mut next = vec![*row.last().unwrap()];
            for v in &row {
                let last = *next.last().unwrap();
                next.push(last + v);
            }
            out.push(next[0]);
            row = next;
        }
        out
    }

    #[test]
    fn set_partition_counts() {
        let limits = EnumerationLimits::default();
        let bells = bell_numbers(10);
        for n in 0..=10 {
            let all: Vec<_> = enumerate_set_partitions(n, &limits).unwrap().collect();
            assert_eq!(all.len() as u64, bells[n], "n = {n}");
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
        assert_eq!(enumerate_set_partitions(3, &limits).unwrap().count(), 5);
        assert_eq!(enumerate_set_partitions(6, &limits).unwrap().count(), 203);
        assert_eq!(enumerate_set_partitions(0, &limits).unwrap().count(), 1);
    }

    #[test]
    fn set_partitions_cover_the_ground_set() {
        for sigma in enumerate_set_partitions(5, &EnumerationLimits::default()).unwrap() {
            let mut all: Vec<usize> = sigma.blocks.iter().flatten().copied().collect();
            all.sort();
            assert_eq!(all, (1..=5).collect::<Vec<_>>());
        }
    }

    #[test]
    fn signed_partition_counts() {
        let limits = EnumerationLimits::default();
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_signed_partitions(n, &limits).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 24, 116, 648]);
    }

    #[test]
    fn n_equals_one() {
        let all: Vec<_> = enumerate_signed_partitions(1, &EnumerationLimits::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&SignedPartition {
            n: 1,
            zero_block: vec![],
            pairs: vec![vec![1]],
        }));
        assert!(all.contains(&SignedPartition {
            n: 1,
            zero_block: vec![1],
            pairs: vec![],
        }));
    }

    #[test]
    fn signed_partitions_are_valid_and_distinct() {
        let all: Vec<_> = enumerate_signed_partitions(5, &EnumerationLimits::default())
            .unwrap()
            .collect();
        assert!(all.iter().all(SignedPartition::is_valid));
        let canonical: HashSet<Vec<Vec<i64>>> = all
            .iter()
            .map(|p| {
                let mut blocks: Vec<Vec<i64>> = p
                    .all_blocks()
                    .into_iter()
                    .map(|mut b| {
                        b.sort();
                        b
                    })
                    .collect();
                blocks.sort();
                blocks
            })
            .collect();
        assert_eq!(canonical.len(), all.len());
    }

    #[test]
    fn limits_are_enforced() {
        let limits = EnumerationLimits {
            set_partitions: 4,
            signed_partitions: 3,
        };
        assert_eq!(
            enumerate_set_partitions(5, &limits).unwrap_err(),
            CombError::LimitExceeded { n: 5, limit: 4 }
        );
        assert!(enumerate_signed_partitions(4, &limits).is_err());
    }
}
