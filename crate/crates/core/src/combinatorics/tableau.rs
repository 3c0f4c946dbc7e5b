use std::fmt;

use crate::combinatorics::{DescentSet, Partition};

/// Rows of letters; row lengths weakly decrease.
///
/// Letters are signed integers so that the same type carries standard,
/// semistandard and signed (type C / BRKV) tableaux. Order constraints are
/// checked against a caller-supplied key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<i32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i32>>) -> Self {
        let rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        debug_assert!(rows.windows(2).all(|w| w[0].len() >= w[1].len()));
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<i32>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn column(&self, col: usize) -> Vec<i32> {
        self.rows.iter().filter_map(|r| r.get(col).copied()).collect()
    }

    /// Row (zero-based) containing `letter`, first occurrence.
    pub fn row_of(&self, letter: i32) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&letter))
    }

    /// Rows and columns weakly increase under `key`.
    pub fn is_weakly_increasing_by<K: Ord>(&self, key: impl Fn(i32) -> K) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| key(w[0]) <= key(w[1])));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].iter().zip(&pair[0]).all(|(&below, &above)| key(above) <= key(below))
        });
        rows_ok && cols_ok
    }

    /// Rows weakly and columns strictly increasing in the integer order.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(&below, &above)| above < below));
        rows_ok && cols_ok
    }

    /// Contains each of `1..=n` once, strictly increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v < 1 || v as usize > n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        rows_ok && self.is_semistandard()
    }

    /// For a standard tableau: the `i` with `i+1` in a strictly lower row than `i`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.size();
        let mut row_of = vec![0usize; n + 2];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        let mut d = DescentSet::empty(n);
        for i in 1..n {
            if row_of[i + 1] > row_of[i] {
                d.insert(i);
            }
        }
        d
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, |r| r.len());
        Tableau::new((0..width).map(|c| self.column(c)).collect())
    }

    /// Occurrences of `letter`.
    pub fn count(&self, letter: i32) -> usize {
        self.rows.iter().flatten().filter(|&&v| v == letter).count()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_set_of_standard_tableau() {
        let t = Tableau::new(vec![vec![1, 2, 4], vec![3, 5]]);
        assert!(t.is_standard());
        assert_eq!(t.descent_set().positions(), vec![2, 4]);
        assert_eq!(t.shape(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(t.transpose(), Tableau::new(vec![vec![1, 3], vec![2, 5], vec![4]]));
    }

    #[test]
    fn standardness_checks() {
        assert!(!Tableau::new(vec![vec![1, 3], vec![2, 2]]).is_standard());
        assert!(Tableau::new(vec![vec![1, 1, 2], vec![2, 3]]).is_semistandard());
        assert!(!Tableau::new(vec![vec![1, 1], vec![1]]).is_semistandard());
    }
}
