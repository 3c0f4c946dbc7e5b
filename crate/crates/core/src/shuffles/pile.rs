//! Shuffles described by an ordered list of piles.
//!
//! Each card independently picks pile `b` with probability `prob[b]`. The
//! cards landing in pile `b` receive the next block of consecutive values
//! in pile order, laid out by the pile's orientation. Riffle, type C and
//! `(α, β, γ)` shuffles and their iterates are all of this form.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use rand::Rng;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::rsk::{fill_blocks, Orientation};
use crate::shuffles::PermDistribution;
use crate::symfun::ParamVector;

/// Word enumerations above this many words are refused.
pub const WORD_LIMIT: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pile {
    pub prob: Rational,
    pub orientation: Orientation,
    /// Letter or tuple of letters naming the pile.
    pub label: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PileModel {
    piles: Vec<Pile>,
}

impl PileModel {
    /// Drops zero-probability piles.
    pub fn new(piles: Vec<Pile>) -> Self {
        PileModel { piles: piles.into_iter().filter(|p| !p.prob.is_zero()).collect() }
    }

    pub fn piles(&self) -> &[Pile] {
        &self.piles
    }

    pub fn biased_riffle(q: &[Rational]) -> Self {
        PileModel::new(
            q.iter()
                .enumerate()
                .map(|(i, p)| Pile { prob: p.clone(), orientation: Orientation::Up, label: vec![i as i32 + 1] })
                .collect(),
        )
    }

    /// Stacks `1, -1, 2, -2, ..`; even-numbered stacks are flipped.
    pub fn type_c(y: &[Rational]) -> Self {
        let half = Rational::new(1.into(), 2.into());
        let mut piles = Vec::new();
        for (i, yi) in y.iter().enumerate() {
            let letter = i as i32 + 1;
            piles.push(Pile { prob: yi * &half, orientation: Orientation::Up, label: vec![letter] });
            piles.push(Pile { prob: yi * &half, orientation: Orientation::Down, label: vec![-letter] });
        }
        PileModel::new(piles)
    }

    /// Piles `-m, .., -1, 0, 1, .., m`.
    pub fn abg(p: &ParamVector) -> Self {
        PileModel::new(abg_letters(p).into_iter().map(|(l, prob)| Pile { prob, orientation: letter_orientation(l), label: vec![l] }).collect())
    }

    /// The single-step model for `k` successive `(α, β, γ)` shuffles: piles
    /// are `k`-tuples of letters, ordered by the first letter and then by
    /// the remaining tuple, ascending after a nonnegative first letter and
    /// descending after a negative one. Tuples containing a zero are mixed;
    /// otherwise tuples with negative product are flipped.
    pub fn abg_iterated(p: &ParamVector, k: usize) -> Self {
        let letters = abg_letters(p);
        let mut tuples: Vec<(Vec<i32>, Rational)> = vec![(Vec::new(), Rational::one())];
        for _ in 0..k {
            tuples = tuples
                .into_iter()
                .flat_map(|(t, prob)| {
                    letters.iter().map(move |(l, q)| {
                        let mut t = t.clone();
                        t.push(*l);
                        (t, &prob * q)
                    })
                })
                .collect();
        }
        tuples.sort_by(|a, b| tuple_order(&a.0, &b.0));
        let piles = tuples
            .into_iter()
            .map(|(label, prob)| {
                let orientation = if label.contains(&0) {
                    Orientation::Mixed
                } else if label.iter().filter(|&&l| l < 0).count() % 2 == 1 {
                    Orientation::Down
                } else {
                    Orientation::Up
                };
                Pile { prob, orientation, label }
            })
            .collect();
        PileModel::new(piles)
    }

    pub fn word_count(&self, n: usize) -> u128 {
        (self.piles.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
    }

    /// Exact law, by enumerating every word of pile indices.
    pub fn exact_distribution(&self, n: usize) -> Result<PermDistribution> {
        let words = self.word_count(n);
        if words > WORD_LIMIT {
            return Err(Error::InfeasibleEnumeration { words, limit: WORD_LIMIT });
        }
        let orientations: Vec<Orientation> = self.piles.iter().map(|p| p.orientation).collect();
        let powers: Vec<Vec<Rational>> =
            self.piles.iter().map(|p| (0..=n).map(|e| rational::pow(&p.prob, e)).collect()).collect();
        let mut out = PermDistribution::new(n);
        let mut word = vec![0usize; n];
        let mut counts = vec![0usize; self.piles.len()];
        self.enumerate(0, &mut word, &mut counts, &orientations, &powers, &mut out);
        Ok(out)
    }

    fn enumerate(
        &self,
        pos: usize,
        word: &mut [usize],
        counts: &mut [usize],
        orientations: &[Orientation],
        powers: &[Vec<Rational>],
        out: &mut PermDistribution,
    ) {
        if pos == word.len() {
            let weight = counts.iter().enumerate().fold(Rational::one(), |acc, (b, &c)| acc * &powers[b][c]);
            let perms = fill_blocks(word, orientations);
            let each = weight / Rational::from_integer(perms.len().into());
            for w in perms {
                out.add(w, each.clone());
            }
            return;
        }
        for b in 0..self.piles.len() {
            word[pos] = b;
            counts[b] += 1;
            self.enumerate(pos + 1, word, counts, orientations, powers, out);
            counts[b] -= 1;
        }
    }

    /// One draw: letters i.i.d. from the pile probabilities, blocks filled
    /// by orientation, mixed blocks shuffled uniformly.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, cumulative: &[f64], rng: &mut R) -> Permutation {
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); self.piles.len()];
        for pos in 0..n {
            let x: f64 = rng.random();
            let b = cumulative.partition_point(|&c| c <= x).min(self.piles.len() - 1);
            members[b].push(pos);
        }
        let mut images = vec![0usize; n];
        let mut next = 1;
        for (pile, positions) in self.piles.iter().zip(&members) {
            let mut values: Vec<usize> = (next..next + positions.len()).collect();
            match pile.orientation {
                Orientation::Up => {}
                Orientation::Down => values.reverse(),
                Orientation::Mixed => shuffle_in_place(&mut values, rng),
            }
            for (&pos, v) in positions.iter().zip(values) {
                images[pos] = v;
            }
            next += positions.len();
        }
        Permutation::from_images_unchecked(images)
    }

    /// Cumulative pile probabilities as floats for sampling.
    pub fn cumulative(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.piles
            .iter()
            .map(|p| {
                acc += rational::to_f64(&p.prob);
                acc
            })
            .collect()
    }
}

pub(crate) fn shuffle_in_place<T, R: Rng + ?Sized>(values: &mut [T], rng: &mut R) {
    for i in (1..values.len()).rev() {
        let j = rng.random_range(0..=i);
        values.swap(i, j);
    }
}

fn letter_orientation(l: i32) -> Orientation {
    match l.signum() {
        1 => Orientation::Up,
        -1 => Orientation::Down,
        _ => Orientation::Mixed,
    }
}

/// `(letter, probability)` in increasing letter order: `β_m .. β_1` as
/// `-m .. -1`, then `γ` as `0`, then `α_1 .. α_m`.
pub fn abg_letters(p: &ParamVector) -> Vec<(i32, Rational)> {
    let mut out = Vec::new();
    for (i, b) in p.beta.iter().enumerate().rev() {
        out.push((-(i as i32 + 1), b.clone()));
    }
    out.push((0, p.gamma.clone()));
    for (i, a) in p.alpha.iter().enumerate() {
        out.push((i as i32 + 1, a.clone()));
    }
    out.retain(|(_, prob)| !prob.is_zero());
    out
}

fn tuple_order(a: &[i32], b: &[i32]) -> Ordering {
    match (a.split_first(), b.split_first()) {
        (Some((x, ra)), Some((y, rb))) => match x.cmp(y) {
            Ordering::Equal if *x >= 0 => tuple_order(ra, rb),
            Ordering::Equal => tuple_order(rb, ra),
            other => other,
        },
        _ => a.len().cmp(&b.len()),
    }
}
