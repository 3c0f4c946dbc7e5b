use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Irreducible character `χ^λ(μ)` of the symmetric group by the
/// Murnaghan–Nakayama rule.
///
/// Border strips are removed on the beta-set `{λ_i + ℓ - i}`: taking `b`
/// to `b - r` removes an `r`-strip whose height is the number of beta
/// numbers jumped over.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), got: mu.size() });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda.clone(), mu.parts(), &mut memo))
}

fn mn_rec(lambda: Partition, mu: &[usize], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lambda.clone(), mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let len = lambda.len();
    let betas: BTreeSet<usize> = (0..len).map(|i| lambda[i] + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for &b in &betas {
        if b < r || betas.contains(&(b - r)) {
            continue;
        }
        let height = betas.range(b - r + 1..b).count();
        let mut next = betas.clone();
        next.remove(&b);
        next.insert(b - r);
        let shape = from_betas(&next);
        let term = mn_rec(shape, rest, memo);
        if height.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    memo.insert(key, total.clone());
    total
}

fn from_betas(betas: &BTreeSet<usize>) -> Partition {
    let len = betas.len();
    let parts = betas.iter().rev().enumerate().map(|(i, &b)| b + i + 1 - len).collect();
    Partition::from_unsorted(parts)
}
