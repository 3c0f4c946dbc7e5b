use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line form: `images[i-1] = w(i)`.
///
/// When a permutation describes a deck, position `i` holds card `w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// A subset of `{1, .., n-1}` stored as a bitmask (bit `i` is position `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationStats {
    pub descents: DescentSet,
    pub ascents: DescentSet,
    pub cycle_type: Partition,
    pub cycle_counts: BTreeMap<usize, usize>,
    pub inverse: Permutation,
    pub reverse: Permutation,
}

impl DescentSet {
    pub const MAX_N: usize = 64;

    pub fn empty(n: usize) -> Self {
        DescentSet { n, mask: 0 }
    }

    /// All of `{1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        DescentSet::empty(n).complement()
    }

    pub fn from_positions(n: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for i in positions {
            if i == 0 || i >= n.max(1) || i >= Self::MAX_N {
                return Err(Error::Parse(format!("position {i} outside 1..{}", n.saturating_sub(1))));
            }
            mask |= 1 << i;
        }
        Ok(DescentSet { n, mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < Self::MAX_N && self.mask & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i >= 1 && i < self.n);
        self.mask |= 1 << i;
    }

    pub fn positions(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn complement(&self) -> Self {
        let all = if self.n <= 1 { 0 } else { ((1u64 << (self.n - 1)) - 1) << 1 };
        DescentSet { n: self.n, mask: all & !self.mask }
    }

    /// Every subset of `{1, .., n-1}`.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        let bits = n.saturating_sub(1);
        (0u64..(1u64 << bits)).map(move |m| DescentSet { n, mask: m << 1 })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.positions().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", p.join(","))
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The order-reversing permutation `n n-1 .. 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Images read right to left: `i -> w(n+1-i)`.
    pub fn reverse(&self) -> Permutation {
        Permutation { images: self.images.iter().rev().copied().collect() }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation { images: other.images.iter().map(|&i| self.images[i - 1]).collect() }
    }

    /// `w0 ∘ self ∘ w0` with `w0` the longest element.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let n = self.len();
        Permutation { images: self.images.iter().rev().map(|&v| n + 1 - v).collect() }
    }

    pub fn descents(&self) -> DescentSet {
        let mut d = DescentSet::empty(self.len());
        for i in 1..self.len() {
            if self.images[i - 1] > self.images[i] {
                d.insert(i);
            }
        }
        d
    }

    pub fn ascents(&self) -> DescentSet {
        self.descents().complement()
    }

    /// `i -> N_i(w)`, the number of `i`-cycles.
    pub fn cycle_counts(&self) -> BTreeMap<usize, usize> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut counts = BTreeMap::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i - 1];
                len += 1;
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        counts
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_multiplicities(&self.cycle_counts())
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &v)| i + 1 == v).count()
    }

    pub fn stats(&self) -> PermutationStats {
        PermutationStats {
            descents: self.descents(),
            ascents: self.ascents(),
            cycle_type: self.cycle_type(),
            cycle_counts: self.cycle_counts(),
            inverse: self.inverse(),
            reverse: self.reverse(),
        }
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation { images: cur.clone() }];
        while next_permutation(&mut cur) {
            out.push(Permutation { images: cur.clone() });
        }
        out
    }

    /// Whether the pattern (a permutation of `1..=k`) occurs as a subsequence.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let k = pattern.len();
        let n = self.len();
        if k > n {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let vals: Vec<usize> = idx.iter().map(|&i| self.images[i]).collect();
            if vals.iter().enumerate().all(|(a, va)| {
                vals.iter().enumerate().all(|(b, vb)| (va < vb) == (pattern[a] < pattern[b]))
            }) {
                return true;
            }
            // next k-subset of 0..n
            let mut i = k;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < n - k + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

pub fn permutation_stats(w: &Permutation) -> PermutationStats {
    w.stats()
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Space- or comma-separated images; a single run of digits is read
    /// one digit per image.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
        let images = if tokens.len() == 1 && tokens[0].len() > 1 {
            tokens[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad image {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            tokens
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_examples() {
        assert!(Permutation::identity(6).descents().is_empty());
        assert_eq!(Permutation::identity(4).cycle_type(), Partition::column(4));
        let w = perm("1 9 5 2 6 7 3 10 4 8");
        assert_eq!(w.descents().positions(), vec![2, 3, 6, 8]);
        assert_eq!(w.ascents().positions(), vec![1, 4, 5, 7, 9]);
        assert_eq!(Permutation::longest(5).descents().positions(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn cycle_type_and_inverse() {
        let w = perm("2 3 1 5 4");
        assert_eq!(w.cycle_type(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(w.inverse(), perm("3 1 2 5 4"));
        for w in Permutation::all(5) {
            assert_eq!(w.compose(&w.inverse()), Permutation::identity(5));
            assert_eq!(w.reverse().reverse(), w);
            assert_eq!(w.cycle_type().size(), 5);
        }
    }

    #[test]
    fn all_counts_and_patterns() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(5).len(), 120);
        assert!(perm("2 1 3").contains_pattern(&[2, 1, 3]));
        assert!(perm("1 4 2 5 3").contains_pattern(&[3, 1, 2]));
        assert!(!perm("1 2 4 3").contains_pattern(&[2, 1, 3]));
    }

    #[test]
    fn descent_set_complement() {
        let d = DescentSet::from_positions(5, [1, 3]).unwrap();
        assert_eq!(d.complement().positions(), vec![2, 4]);
        assert_eq!(d.complement().complement(), d);
        assert_eq!(DescentSet::full(1).len(), 0);
        assert_eq!(DescentSet::all(4).count(), 8);
        assert!(DescentSet::from_positions(3, [3]).is_err());
    }

    #[test]
    fn conjugation_by_longest() {
        let w = perm("2 3 1 4");
        let w0 = Permutation::longest(4);
        assert_eq!(w.conjugate_by_longest(), w0.compose(&w).compose(&w0));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(perm("312"), perm("3 1 2"));
        assert_eq!(perm("3,1,2"), perm("3 1 2"));
        assert!("1 1 2".parse::<Permutation>().is_err());
    }
}
