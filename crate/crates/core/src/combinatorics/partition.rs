use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::factorial;

/// An integer partition stored as weakly decreasing positive parts.
///
/// The multiplicity map `i -> m_i` is computed once at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    multiplicities: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub conjugate: Partition,
    pub z: BigUint,
    pub epsilon: i32,
    pub length: usize,
    pub multiplicities: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts arbitrary positive parts (zeros are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &p in &parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Partition { parts, multiplicities }
    }

    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    /// Rebuilds a partition from `i -> m_i`.
    pub fn from_multiplicities(m: &BTreeMap<usize, usize>) -> Self {
        let parts = m
            .iter()
            .rev()
            .flat_map(|(&i, &mi)| std::iter::repeat_n(i, mi))
            .filter(|&p| p > 0)
            .collect();
        Self::from_sorted(parts)
    }

    /// The single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// Centralizer order `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        self.multiplicities.iter().fold(BigUint::one(), |acc, (&i, &m)| {
            acc * num_traits::pow(BigUint::from(i), m) * factorial(m)
        })
    }

    /// `(-1)^{|λ| - ℓ(λ)}`.
    pub fn epsilon(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Whether the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            conjugate: self.conjugate(),
            z: self.z(),
            epsilon: self.epsilon(),
            length: self.len(),
            multiplicities: self.multiplicities.clone(),
        }
    }

    /// Every partition of `n`, in reverse-lexicographic order: `(n)` first, `(1^n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }

    /// Every partition of every size `0..=n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Cells `(row, col)`, zero-based, in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Corners: cells whose removal leaves a partition.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| r + 1 == self.len() || self.parts[r] > self.parts[r + 1])
            .collect()
    }

    /// Rows where a new cell may be appended (including a fresh row).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&r| r == 0 || self[r] < self[r - 1])
            .collect()
    }

    pub fn with_cell_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Self::from_sorted(parts)
    }

    pub fn with_cell_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Self::from_sorted(parts)
    }
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Free-function form of [`Partition::all`].
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

pub fn partition_stats(lambda: &Partition) -> PartitionStats {
    lambda.stats()
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `(3,1)` or `3 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: all weakly decreasing sequences summing to n,
    /// found by filtering every composition.
    fn partitions_by_compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if mask & (1 << i) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                out.push(parts);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(Partition::all(1), vec![p(&[1])]);
        let four: Vec<_> = Partition::all(4).into_iter().map(|l| l.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn enumeration_matches_composition_filter() {
        for n in 0..=10 {
            let mut ours: Vec<_> = Partition::all(n).into_iter().map(|l| l.parts().to_vec()).collect();
            ours.sort();
            assert_eq!(ours, partitions_by_compositions(n), "n = {n}");
        }
    }

    #[test]
    fn stats_examples() {
        let s = p(&[3, 1]).stats();
        assert_eq!(s.conjugate, p(&[2, 1, 1]));
        assert_eq!(s.z, BigUint::from(3u32));
        assert_eq!(s.epsilon, 1);
        assert_eq!(s.length, 2);
        assert_eq!(Partition::column(5).z(), factorial(5));
        for n in 1..8 {
            let row = Partition::row(n);
            assert_eq!(row.conjugate(), Partition::column(n));
            assert_eq!(row.epsilon(), if n % 2 == 1 { 1 } else { -1 });
        }
    }

    #[test]
    fn z_counts_commuting_permutations() {
        // z_(3,1) = number of elements of S_4 commuting with (1 2 3).
        use crate::combinatorics::Permutation;
        let g = Permutation::new(vec![2, 3, 1, 4]).unwrap();
        let count = Permutation::all(4)
            .into_iter()
            .filter(|h| g.compose(h) == h.compose(&g))
            .count();
        assert_eq!(BigUint::from(count), p(&[3, 1]).z());
    }

    #[test]
    fn conjugate_is_involution_and_multiplicities_roundtrip() {
        for n in 0..=10 {
            for l in Partition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(Partition::from_multiplicities(l.multiplicities()), l);
                assert_eq!(l.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[2, 2, 1]).to_string(), "(2,2,1)");
    }
}
