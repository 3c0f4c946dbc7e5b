use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::rational::{self, factorial, from_biguint, Rational};
use crate::shuffles::ShuffleSpec;

/// Exact probability distribution on `S_n`. Permutations of weight zero
/// are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermDistribution {
    n: usize,
    weights: BTreeMap<Permutation, Rational>,
}

impl PermDistribution {
    pub fn new(n: usize) -> Self {
        PermDistribution { n, weights: BTreeMap::new() }
    }

    pub fn point_mass(w: Permutation) -> Self {
        let mut d = PermDistribution::new(w.len());
        d.add(w, Rational::one());
        d
    }

    pub fn uniform(n: usize) -> Self {
        let weight = Rational::one() / from_biguint(&factorial(n));
        let mut d = PermDistribution::new(n);
        for w in Permutation::all(n) {
            d.add(w, weight.clone());
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &BTreeMap<Permutation, Rational> {
        &self.weights
    }

    pub fn get(&self, w: &Permutation) -> Rational {
        self.weights.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    pub fn add(&mut self, w: Permutation, weight: Rational) {
        debug_assert_eq!(w.len(), self.n);
        if weight.is_zero() {
            return;
        }
        let entry = self.weights.entry(w).or_insert_with(Rational::zero);
        *entry += weight;
    }

    pub fn total(&self) -> Rational {
        self.weights.values().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Nonnegative weights summing to one.
    pub fn is_probability(&self) -> bool {
        self.weights.values().all(rational::is_nonnegative) && self.total() == Rational::one()
    }

    /// Image under `w ↦ f(w)`.
    pub fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> PermDistribution {
        let mut out = PermDistribution::new(self.n);
        for (w, p) in &self.weights {
            out.add(f(w), p.clone());
        }
        out
    }

    /// Deck turned over after the shuffle: each one-line form read backwards.
    pub fn reversed(&self) -> PermDistribution {
        self.map(Permutation::reverse)
    }

    pub fn conjugate_by_longest(&self) -> PermDistribution {
        self.map(Permutation::conjugate_by_longest)
    }

    /// `a` then `b`: the law of `σ∘τ` with `σ ~ self`, `τ ~ other`, so the
    /// second shuffle permutes the positions left by the first.
    pub fn convolve(&self, other: &PermDistribution) -> Result<PermDistribution> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { expected: self.n, got: other.n });
        }
        let mut out = PermDistribution::new(self.n);
        for (s, ps) in &self.weights {
            for (t, pt) in &other.weights {
                out.add(s.compose(t), ps * pt);
            }
        }
        Ok(out)
    }

    /// Pushes the distribution forward along a statistic.
    pub fn marginal<K: Ord>(&self, statistic: impl Fn(&Permutation) -> K) -> BTreeMap<K, Rational> {
        let mut out = BTreeMap::new();
        for (w, p) in &self.weights {
            *out.entry(statistic(w)).or_insert_with(Rational::zero) += p;
        }
        out
    }

    /// `max_π (1 - n!·P(π))`.
    pub fn separation_distance(&self) -> Rational {
        let n_fact = from_biguint(&factorial(self.n));
        if num_bigint::BigUint::from(self.weights.len()) < factorial(self.n) {
            return Rational::one();
        }
        let min = self.weights.values().min().cloned().unwrap_or_else(Rational::zero);
        Rational::one() - n_fact * min
    }

    pub fn to_json(&self, spec: Option<&ShuffleSpec>) -> DistributionJson {
        DistributionJson {
            n: self.n,
            spec: spec.cloned(),
            weights: self.weights.iter().map(|(w, p)| (w.to_string(), rational::format(p))).collect(),
        }
    }

    pub fn from_json(json: &DistributionJson) -> Result<PermDistribution> {
        let mut out = PermDistribution::new(json.n);
        for (key, value) in &json.weights {
            let w: Permutation = key.parse()?;
            if w.len() != json.n {
                return Err(Error::SizeMismatch { expected: json.n, got: w.len() });
            }
            out.add(w, rational::parse(value)?);
        }
        Ok(out)
    }
}

/// Serialized form: `{n, spec, weights: {"1 2 3": "p/q"}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistributionJson {
    pub n: usize,
    pub spec: Option<ShuffleSpec>,
    pub weights: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn uniform_and_point_mass() {
        let u = PermDistribution::uniform(3);
        assert!(u.is_probability());
        assert!(u.separation_distance().is_zero());
        let id = PermDistribution::point_mass(Permutation::identity(3));
        assert_eq!(id.separation_distance(), Rational::one());
        assert_eq!(u.convolve(&id).unwrap(), u);
        assert_eq!(id.convolve(&u).unwrap(), u);
        assert!(u.convolve(&PermDistribution::uniform(2)).is_err());
    }

    #[test]
    fn convolution_composes_in_order() {
        let a = PermDistribution::point_mass(perm("2 3 1"));
        let b = PermDistribution::point_mass(perm("2 1 3"));
        let ab = a.convolve(&b).unwrap();
        assert_eq!(ab.weights().keys().next().unwrap(), &perm("2 3 1").compose(&perm("2 1 3")));
    }

    #[test]
    fn json_round_trip() {
        let mut d = PermDistribution::new(2);
        d.add(perm("1 2"), ratio(3, 4));
        d.add(perm("2 1"), ratio(1, 4));
        let json = d.to_json(None);
        assert_eq!(json.weights["1 2"], "3/4");
        let text = serde_json::to_string(&json).unwrap();
        let back: DistributionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(PermDistribution::from_json(&back).unwrap(), d);
    }
}
