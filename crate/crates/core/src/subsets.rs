//! Finite subsets of `[n] = {1, ..., n}` as bitmasks.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension supported by [`IndexSet`].
pub const MAX_N: usize = 64;

/// A subset of `[n]`, with 1-based indices stored as bits `i - 1`.
///
/// Sets are ordered by size first and lexicographically on their sorted
/// index lists second, so a map keyed by `IndexSet` iterates grade by grade.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from distinct indices in `1..=n`, in any order.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i == 0 || i > n || i > MAX_N {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            let b = 1u64 << (i - 1);
            if bits & b != 0 {
                return Err(Error::MalformedIndexSet(format!("repeated index {i}")));
            }
            bits |= b;
        }
        Ok(IndexSet(bits))
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_N).contains(&i));
        IndexSet(1u64 << (i - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_N).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | (1u64 << (i - 1)))
    }

    pub fn remove(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << (i - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest index, or 0 for the empty set.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Sorted 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(t + 1)
            }
        })
    }

    /// Number of pairs `(i, j)` with `i` in `self`, `j` in `other` and `i > j`.
    ///
    /// This is the number of transpositions needed to sort the concatenation
    /// of the two sorted index lists.
    pub fn crossings(self, other: Self) -> u32 {
        self.iter()
            .map(|i| (other.0 & ((1u64 << (i - 1)) - 1)).count_ones())
            .sum()
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet(idx.iter().fold(0u64, |b, &i| b | (1u64 << (i - 1)))));
        // advance to the next combination
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == n - k + pos {
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
        idx[pos - 1] += 1;
        for j in pos..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
