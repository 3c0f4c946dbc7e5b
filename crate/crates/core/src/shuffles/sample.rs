//! Random sampling. Draws are split into fixed-size chunks, and chunk `c`
//! uses a ChaCha stream seeded by `(seed, c)`, so output depends only on the
//! seed and count, not on the number of threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::rational;
use crate::shuffles::pile::{abg_letters, shuffle_in_place};
use crate::shuffles::{ShuffleKind, ShuffleSpec};
use crate::symfun::ParamVector;

/// Draws per independent RNG stream.
pub const SAMPLE_CHUNK: usize = 4096;

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn sample_chunked<F>(count: usize, seed: u64, draw: F) -> Vec<Permutation>
where
    F: Fn(&mut ChaCha8Rng) -> Permutation + Sync,
{
    let chunks = count.div_ceil(SAMPLE_CHUNK);
    let parts: Vec<Vec<Permutation>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, c);
            let size = SAMPLE_CHUNK.min(count - c * SAMPLE_CHUNK);
            (0..size).map(|_| draw(&mut rng)).collect()
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// A uniformly random interleaving of piles with sizes `mu`.
fn sample_mu<R: Rng + ?Sized>(mu: &[usize], rng: &mut R) -> Permutation {
    let mut letters: Vec<usize> = mu.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i, m)).collect();
    shuffle_in_place(&mut letters, rng);
    let mut next: Vec<usize> = mu
        .iter()
        .scan(1, |acc, &m| {
            let start = *acc;
            *acc += m;
            Some(start)
        })
        .collect();
    let images = letters
        .into_iter()
        .map(|b| {
            next[b] += 1;
            next[b] - 1
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `k` top-to-random moves on a deck in order `1..n`: deck position `i`
/// holds card `w(i)`.
fn sample_top_to_random<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Permutation {
    let mut deck: Vec<usize> = (1..=n).collect();
    for _ in 0..k {
        let top = deck.remove(0);
        let slot = rng.random_range(0..n);
        deck.insert(slot, top);
    }
    Permutation::from_images_unchecked(deck)
}

/// `count` independent draws, deterministic in `seed`.
pub fn sample(spec: &ShuffleSpec, n: usize, seed: u64, count: usize) -> Result<Vec<Permutation>> {
    spec.validate()?;
    let draws = match &spec.kind {
        ShuffleKind::Mu { mu } => {
            let total: usize = mu.iter().sum();
            if total != n {
                return Err(Error::SizeMismatch { expected: n, got: total });
            }
            sample_chunked(count, seed, |rng| sample_mu(mu, rng))
        }
        ShuffleKind::TopToRandom { k } => sample_chunked(count, seed, |rng| sample_top_to_random(*k, n, rng)),
        _ => {
            let model = spec.pile_model().expect("pile kinds");
            let cumulative = model.cumulative();
            sample_chunked(count, seed, |rng| model.sample(n, &cumulative, rng))
        }
    };
    Ok(if spec.reversed { draws.iter().map(Permutation::reverse).collect() } else { draws })
}

fn draw_label<R: Rng + ?Sized>(letters: &[(i32, f64)], rng: &mut R) -> i32 {
    let x: f64 = rng.random();
    let mut acc = 0.0;
    for &(l, p) in letters {
        acc += p;
        if x < acc {
            return l;
        }
    }
    letters.last().expect("nonempty").0
}

fn float_letters(p: &ParamVector) -> Vec<(i32, f64)> {
    abg_letters(p).into_iter().map(|(l, q)| (l, rational::to_f64(&q))).collect()
}

/// The physical `(α, β, γ)` shuffle: cut into piles with multinomial sizes,
/// mix pile 0, flip the negative piles, then riffle by repeatedly dropping
/// from a pile chosen with probability proportional to its size.
pub fn sample_pile_cut(p: &ParamVector, n: usize, seed: u64, count: usize) -> Result<Vec<Permutation>> {
    p.check_normalized()?;
    let letters = float_letters(p);
    Ok(sample_chunked(count, seed, |rng| {
        let mut sizes: Vec<usize> = vec![0; letters.len()];
        for _ in 0..n {
            let l = draw_label(&letters, rng);
            sizes[letters.iter().position(|&(x, _)| x == l).expect("drawn")] += 1;
        }
        let mut piles: Vec<Vec<usize>> = Vec::new();
        let mut next = 1;
        for (&(l, _), &size) in letters.iter().zip(&sizes) {
            let mut pile: Vec<usize> = (next..next + size).collect();
            next += size;
            if l < 0 {
                pile.reverse();
            } else if l == 0 {
                shuffle_in_place(&mut pile, rng);
            }
            piles.push(pile);
        }
        let mut deck = Vec::with_capacity(n);
        let mut remaining = n;
        let mut fronts = vec![0usize; piles.len()];
        while remaining > 0 {
            let mut pick = rng.random_range(0..remaining);
            let b = (0..piles.len())
                .find(|&b| {
                    let left = piles[b].len() - fronts[b];
                    if pick < left {
                        true
                    } else {
                        pick -= left;
                        false
                    }
                })
                .expect("some pile is nonempty");
            deck.push(piles[b][fronts[b]]);
            fronts[b] += 1;
            remaining -= 1;
        }
        Permutation::from_images_unchecked(deck)
    }))
}

/// Deck (top to bottom) produced by the inverse description: card `c`
/// carries `labels[c - 1]`, the zero pile is already mixed into
/// `zero_order`, negative piles read in decreasing card order, positive
/// piles in increasing order, smaller labels on top.
pub fn inverse_labelling_deck(labels: &[i32], zero_order: &[usize]) -> Result<Vec<usize>> {
    let mut distinct: Vec<i32> = labels.to_vec();
    distinct.sort();
    distinct.dedup();
    let mut deck = Vec::with_capacity(labels.len());
    for l in distinct {
        let mut cards: Vec<usize> = (1..=labels.len()).filter(|&c| labels[c - 1] == l).collect();
        match l.signum() {
            -1 => cards.reverse(),
            0 => {
                let mut sorted = zero_order.to_vec();
                sorted.sort();
                if sorted != cards {
                    return Err(Error::Parse(format!("zero pile order {zero_order:?} does not match cards {cards:?}")));
                }
                cards = zero_order.to_vec();
            }
            _ => {}
        }
        deck.extend(cards);
    }
    Ok(deck)
}

/// The inverse description, sampled; each deck is inverted so the draws
/// follow the shuffle itself.
pub fn sample_inverse_labelling(p: &ParamVector, n: usize, seed: u64, count: usize) -> Result<Vec<Permutation>> {
    p.check_normalized()?;
    let letters = float_letters(p);
    Ok(sample_chunked(count, seed, |rng| {
        let labels: Vec<i32> = (0..n).map(|_| draw_label(&letters, rng)).collect();
        let mut zeros: Vec<usize> = (1..=n).filter(|&c| labels[c - 1] == 0).collect();
        shuffle_in_place(&mut zeros, rng);
        let deck = inverse_labelling_deck(&labels, &zeros).expect("consistent zero pile");
        Permutation::from_images_unchecked(deck).inverse()
    }))
}
