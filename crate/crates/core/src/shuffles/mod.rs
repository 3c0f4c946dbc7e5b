//! Shuffle models, their exact laws on `S_n`, sampling, iteration and the
//! separation-distance bound.

mod distribution;
mod pile;
mod sample;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::rational::{self, binomial, from_biguint, Rational};
use crate::rsk::{word_to_single_permutation, Scheme};
use crate::symfun::ParamVector;

pub use distribution::{DistributionJson, PermDistribution};
pub use pile::{abg_letters, Pile, PileModel, WORD_LIMIT};
pub use sample::{inverse_labelling_deck, sample, sample_inverse_labelling, sample_pile_cut, SAMPLE_CHUNK};

/// Which shuffle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum ShuffleKind {
    /// Cut by a multinomial with probabilities `q`, then riffle.
    BiasedRiffle {
        #[serde(with = "rational::serde_rational_vec")]
        q: Vec<Rational>,
    },
    /// Cut into `2k` stacks, flip the even ones, riffle.
    #[serde(rename = "typeC")]
    TypeC {
        #[serde(with = "rational::serde_rational_vec")]
        y: Vec<Rational>,
    },
    Abg(ParamVector),
    /// Cut into piles of the given sizes, choose an interleaving uniformly.
    Mu { mu: Vec<usize> },
    /// `k` successive top-to-random moves.
    TopToRandom { k: usize },
}

/// A shuffle, optionally followed by turning the deck over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleSpec {
    #[serde(flatten)]
    pub kind: ShuffleKind,
    #[serde(default)]
    pub reversed: bool,
}

fn check_probability_vector(name: &str, v: &[Rational]) -> Result<()> {
    if v.is_empty() || !v.iter().all(rational::is_nonnegative) {
        return Err(Error::Unnormalized(format!("{name} must be a nonempty nonnegative vector")));
    }
    let total = v.iter().fold(Rational::zero(), |acc, x| acc + x);
    if total != Rational::one() {
        return Err(Error::Unnormalized(format!("{name} sums to {}", rational::format(&total))));
    }
    Ok(())
}

impl ShuffleSpec {
    pub fn new(kind: ShuffleKind) -> Self {
        ShuffleSpec { kind, reversed: false }
    }

    pub fn biased_riffle(q: Vec<Rational>) -> Self {
        ShuffleSpec::new(ShuffleKind::BiasedRiffle { q })
    }

    /// The `k`-riffle: `q = (1/k, .., 1/k)`.
    pub fn k_riffle(k: usize) -> Self {
        ShuffleSpec::biased_riffle(vec![rational::ratio(1, k as i64); k])
    }

    pub fn type_c(y: Vec<Rational>) -> Self {
        ShuffleSpec::new(ShuffleKind::TypeC { y })
    }

    pub fn abg(p: ParamVector) -> Self {
        ShuffleSpec::new(ShuffleKind::Abg(p))
    }

    pub fn mu(mu: Vec<usize>) -> Self {
        ShuffleSpec::new(ShuffleKind::Mu { mu })
    }

    pub fn top_to_random(k: usize) -> Self {
        ShuffleSpec::new(ShuffleKind::TopToRandom { k })
    }

    pub fn reversed(mut self, reversed: bool) -> Self {
        self.reversed = reversed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        match &self.kind {
            ShuffleKind::BiasedRiffle { q } => check_probability_vector("q", q),
            ShuffleKind::TypeC { y } => check_probability_vector("y", y),
            ShuffleKind::Abg(p) => p.check_normalized(),
            ShuffleKind::Mu { .. } | ShuffleKind::TopToRandom { .. } => Ok(()),
        }
    }

    /// The pile model, for the kinds that have one.
    pub fn pile_model(&self) -> Option<PileModel> {
        match &self.kind {
            ShuffleKind::BiasedRiffle { q } => Some(PileModel::biased_riffle(q)),
            ShuffleKind::TypeC { y } => Some(PileModel::type_c(y)),
            ShuffleKind::Abg(p) => Some(PileModel::abg(p)),
            ShuffleKind::Mu { .. } | ShuffleKind::TopToRandom { .. } => None,
        }
    }

    /// `(α; β; γ)` parameters of riffle and `(α, β, γ)` specs.
    pub fn param_vector(&self) -> Option<ParamVector> {
        match &self.kind {
            ShuffleKind::BiasedRiffle { q } => Some(ParamVector::new(q.clone(), Vec::new(), Rational::zero())),
            ShuffleKind::Abg(p) => Some(p.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for ShuffleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>().join(",");
        match &self.kind {
            ShuffleKind::BiasedRiffle { q } => write!(f, "biased-riffle({})", list(q))?,
            ShuffleKind::TypeC { y } => write!(f, "typeC({})", list(y))?,
            ShuffleKind::Abg(p) => write!(f, "abg{p}")?,
            ShuffleKind::Mu { mu } => {
                write!(f, "mu({})", mu.iter().map(usize::to_string).collect::<Vec<_>>().join(","))?
            }
            ShuffleKind::TopToRandom { k } => write!(f, "top-to-random({k})")?,
        }
        if self.reversed {
            write!(f, " reversed")?;
        }
        Ok(())
    }
}

/// Probability that `k` balls dropped into `n` boxes leave exactly `j`
/// boxes empty: `Σ_r (-1)^{r-j} C(n,r) C(r,j) (1 - r/n)^k`.
pub fn empty_boxes_prob(j: usize, k: usize, n: usize) -> Rational {
    if j > n {
        return Rational::zero();
    }
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for r in j..=n {
        let c = BigInt::from(binomial(n, r) * binomial(r, j));
        let term = Rational::from_integer(c) * rational::pow(&(Rational::one() - rational::ratio(r as i64, n as i64)), k);
        if (r - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Probability that `k` balls dropped into `n` boxes occupy exactly `j`.
pub fn occupied_boxes_prob(j: usize, k: usize, n: usize) -> Rational {
    if j > n {
        return Rational::zero();
    }
    empty_boxes_prob(n - j, k, n)
}

/// Uniform law on the interleavings of piles with sizes `mu` (zero parts ignored).
pub fn mu_distribution(mu: &[usize]) -> Result<PermDistribution> {
    let n: usize = mu.iter().sum();
    let count = rational::multinomial(mu);
    if count > WORD_LIMIT.into() {
        return Err(Error::InfeasibleEnumeration { words: u128::try_from(&count).unwrap_or(u128::MAX), limit: WORD_LIMIT });
    }
    let weight = Rational::one() / from_biguint(&count);
    let mut out = PermDistribution::new(n);
    let mut remaining = mu.to_vec();
    let mut word = Vec::with_capacity(n);
    interleavings(&mut remaining, &mut word, n, &mut |letters| {
        let w = word_to_single_permutation(letters, Scheme::Riffle).expect("positive letters");
        out.add(w, weight.clone());
    });
    Ok(out)
}

fn interleavings(remaining: &mut [usize], word: &mut Vec<i32>, n: usize, emit: &mut impl FnMut(&[i32])) {
    if word.len() == n {
        emit(word);
        return;
    }
    for i in 0..remaining.len() {
        if remaining[i] == 0 {
            continue;
        }
        remaining[i] -= 1;
        word.push(i as i32 + 1);
        interleavings(remaining, word, n, emit);
        word.pop();
        remaining[i] += 1;
    }
}

/// The composition `(n - j, 1^j)`.
pub fn hook_composition(n: usize, j: usize) -> Vec<usize> {
    let mut mu = vec![n - j];
    mu.extend(std::iter::repeat_n(1, j));
    mu
}

/// Exact law after `k` top-to-random moves: with `j` distinct cards moved
/// (probability `P(j occupied)`), a `(1^j, n - j)` shuffle.
pub fn top_to_random_distribution(k: usize, n: usize) -> Result<PermDistribution> {
    let mut out = PermDistribution::new(n);
    for j in 0..=n.min(k) {
        let pj = occupied_boxes_prob(j, k, n);
        if pj.is_zero() {
            continue;
        }
        let mut mu = vec![1; j];
        mu.push(n - j);
        for (w, p) in mu_distribution(&mu)?.weights() {
            out.add(w.clone(), &pj * p);
        }
    }
    Ok(out)
}

/// Exact law of one shuffle of an `n`-card deck.
pub fn exact_distribution(spec: &ShuffleSpec, n: usize) -> Result<PermDistribution> {
    spec.validate()?;
    let base = match &spec.kind {
        ShuffleKind::Mu { mu } => {
            let total: usize = mu.iter().sum();
            if total != n {
                return Err(Error::SizeMismatch { expected: n, got: total });
            }
            mu_distribution(mu)?
        }
        ShuffleKind::TopToRandom { k } => top_to_random_distribution(*k, n)?,
        _ => spec.pile_model().expect("pile kinds").exact_distribution(n)?,
    };
    Ok(if spec.reversed { base.reversed() } else { base })
}

/// `k` successive shuffles by repeated convolution.
pub fn iterate(spec: &ShuffleSpec, k: usize, n: usize) -> Result<PermDistribution> {
    let one = exact_distribution(spec, n)?;
    let mut acc = PermDistribution::point_mass(Permutation::identity(n));
    for _ in 0..k {
        acc = acc.convolve(&one)?;
    }
    Ok(acc)
}

/// A single shuffle equal in law to `k` repetitions of `spec`, where one is
/// known: biased riffles multiply (`q^{⊗k}` in lexicographic order) and
/// `(α_1; ∅; γ)` becomes `(α_1^k; ∅; 1 - α_1^k)`.
pub fn closed_form_iterate(spec: &ShuffleSpec, k: usize) -> Option<ShuffleSpec> {
    if spec.reversed {
        return None;
    }
    match &spec.kind {
        ShuffleKind::BiasedRiffle { q } => {
            let mut probs = vec![Rational::one()];
            for _ in 0..k {
                probs = probs.iter().flat_map(|a| q.iter().map(move |b| a * b)).collect();
            }
            Some(ShuffleSpec::biased_riffle(probs))
        }
        ShuffleKind::Abg(p) if p.alpha.len() <= 1 && p.beta.iter().all(Zero::is_zero) => {
            let a = p.alpha.first().cloned().unwrap_or_else(Rational::zero);
            let ak = rational::pow(&a, k);
            Some(ShuffleSpec::abg(ParamVector::new(vec![ak.clone()], Vec::new(), Rational::one() - ak)))
        }
        _ => None,
    }
}

/// `C(n, 2) (Σα_i² + Σβ_i²)^k`, an upper bound on the separation distance
/// after `k` shuffles.
pub fn separation_bound(p: &ParamVector, k: usize, n: usize) -> Rational {
    from_biguint(&binomial(n, 2)) * rational::pow(&p.sum_of_squares(), k)
}

/// Exact separation distance after `k` shuffles, next to its bound.
pub fn separation_report(p: &ParamVector, k: usize, n: usize) -> Result<(Rational, Rational)> {
    let d = iterate(&ShuffleSpec::abg(p.clone()), k, n)?;
    Ok((d.separation_distance(), separation_bound(p, k, n)))
}

#[cfg(test)]
mod tests;
