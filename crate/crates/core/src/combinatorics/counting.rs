//! Tableau counts: `f_λ`, `β_λ(D)`, Kostka numbers and skew standard counts.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{DescentSet, Partition, Tableau};
use crate::error::{Error, Result};
use crate::rational::factorial;

/// Every standard Young tableau of shape `lambda`, built by placing `n` in
/// each corner recursively.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    if lambda.is_empty() {
        return vec![Tableau::empty()];
    }
    let n = lambda.size() as i32;
    let mut out = Vec::new();
    for row in lambda.corners() {
        for mut t in enumerate_syt(&lambda.with_cell_removed(row)) {
            let rows = t.rows_mut();
            if row == rows.len() {
                rows.push(vec![n]);
            } else {
                rows[row].push(n);
            }
            out.push(t);
        }
    }
    out.sort();
    out
}

/// `f_λ` by the hook-length formula.
pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let hooks = lambda.cells().fold(BigUint::one(), |acc, (r, c)| {
        let arm = lambda[r] - c - 1;
        let leg = conj[c] - r - 1;
        acc * BigUint::from(arm + leg + 1)
    });
    factorial(lambda.size()) / hooks
}

/// `f_λ`; alias of the hook-length fast path.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    hook_length_count(lambda)
}

/// Number of standard tableaux of shape `lambda` with descent set `d`.
pub fn beta(lambda: &Partition, d: &DescentSet) -> Result<BigUint> {
    if d.n() != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: d.n() });
    }
    let count = enumerate_syt(lambda).iter().filter(|t| t.descent_set() == *d).count();
    Ok(BigUint::from(count))
}

/// Standard fillings of the skew shape `outer / inner`.
pub fn skew_standard_count(outer: &Partition, inner: &Partition) -> Result<BigUint> {
    if !outer.contains(inner) {
        return Err(Error::InvalidPartition(inner.parts().to_vec()));
    }
    let mut memo = HashMap::new();
    Ok(skew_rec(outer, inner, &mut memo))
}

fn skew_rec(outer: &Partition, current: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
    if current == outer {
        return BigUint::one();
    }
    if let Some(v) = memo.get(current) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for row in current.addable_rows() {
        let next = current.with_cell_added(row);
        if outer.contains(&next) {
            total += skew_rec(outer, &next, memo);
        }
    }
    memo.insert(current.clone(), total.clone());
    total
}

/// `f_{λ/(r)}`: standard tableaux of the skew shape with the first `r`
/// cells of row one removed.
pub fn skew_count(lambda: &Partition, r: usize) -> Result<BigUint> {
    if r > lambda[0] {
        return Err(Error::SizeMismatch { expected: lambda[0], got: r });
    }
    skew_standard_count(lambda, &Partition::row(r))
}

/// Semistandard tableaux of shape `lambda` and content `mu` (a composition).
///
/// Letters are placed one value at a time as horizontal strips.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<BigUint> {
    let total: usize = mu.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: total });
    }
    let mut memo = HashMap::new();
    Ok(kostka_rec(lambda, mu, Partition::empty(), &mut memo))
}

fn kostka_rec(
    lambda: &Partition,
    mu: &[usize],
    current: Partition,
    memo: &mut HashMap<(usize, Partition), BigUint>,
) -> BigUint {
    let Some((&first, rest)) = mu.split_first() else {
        return if &current == lambda { BigUint::one() } else { BigUint::zero() };
    };
    let key = (mu.len(), current.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for next in horizontal_strips(&current, first, lambda) {
        total += kostka_rec(lambda, rest, next, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Partitions `ν ⊆ bound` with `ν/current` a horizontal strip of `size` cells.
fn horizontal_strips(current: &Partition, size: usize, bound: &Partition) -> Vec<Partition> {
    let rows = bound.len();
    let mut out = Vec::new();
    let mut added = vec![0usize; rows];
    strip_rec(current, bound, size, 0, &mut added, &mut out);
    out
}

fn strip_rec(
    current: &Partition,
    bound: &Partition,
    remaining: usize,
    row: usize,
    added: &mut [usize],
    out: &mut Vec<Partition>,
) {
    if row == added.len() {
        if remaining == 0 {
            let parts = (0..added.len()).map(|r| current[r] + added[r]).collect();
            out.push(Partition::from_unsorted(parts));
        }
        return;
    }
    // A horizontal strip may extend row r no further than the old row r-1.
    let cap_above = if row == 0 { usize::MAX } else { current[row - 1] };
    let max_len = bound[row].min(cap_above);
    let max_add = max_len.saturating_sub(current[row]).min(remaining);
    for a in 0..=max_add {
        added[row] = a;
        strip_rec(current, bound, remaining - a, row + 1, added, out);
    }
    added[row] = 0;
}

/// Every semistandard tableau of shape `lambda` with entries in `1..=max_letter`.
pub fn enumerate_ssyt(lambda: &Partition, max_letter: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<i32>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    ssyt_rec(&cells, 0, max_letter as i32, &mut rows, &mut out);
    out
}

fn ssyt_rec(cells: &[(usize, usize)], idx: usize, max: i32, rows: &mut Vec<Vec<i32>>, out: &mut Vec<Tableau>) {
    if idx == cells.len() {
        out.push(Tableau::new(rows.clone()));
        return;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=max {
        rows[r][c] = v;
        ssyt_rec(cells, idx + 1, max, rows, out);
    }
    rows[r][c] = 0;
}
