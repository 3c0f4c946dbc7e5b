use std::collections::BTreeMap;

use super::*;
use crate::combinatorics::{f_lambda, kostka, DescentSet, Partition, Tableau};
use crate::rational::{int, ratio};
use crate::rsk::rsk_permutation;
use crate::symfun::{eval_extended_schur, eval_schur, eval_stembridge_s};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn pv(alpha: &[Rational], beta: &[Rational], gamma: Rational) -> ParamVector {
    ParamVector::new(alpha.to_vec(), beta.to_vec(), gamma)
}

fn half() -> Rational {
    ratio(1, 2)
}

fn sample_specs() -> Vec<ShuffleSpec> {
    vec![
        ShuffleSpec::k_riffle(2),
        ShuffleSpec::biased_riffle(vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]),
        ShuffleSpec::type_c(vec![int(1)]),
        ShuffleSpec::type_c(vec![ratio(1, 3), ratio(2, 3)]),
        ShuffleSpec::abg(pv(&[half()], &[], half())),
        ShuffleSpec::abg(pv(&[ratio(1, 3)], &[ratio(1, 4), ratio(1, 6)], ratio(1, 4))),
        ShuffleSpec::k_riffle(2).reversed(true),
        ShuffleSpec::mu(vec![1, 2, 1]),
        ShuffleSpec::top_to_random(3),
    ]
}

#[test]
fn riffle_two_cards() {
    let d = exact_distribution(&ShuffleSpec::k_riffle(2), 2).unwrap();
    assert_eq!(d.get(&perm("1 2")), ratio(3, 4));
    assert_eq!(d.get(&perm("2 1")), ratio(1, 4));
}

#[test]
fn single_increasing_pile_is_identity() {
    for n in 1..6 {
        let d = exact_distribution(&ShuffleSpec::abg(pv(&[int(1)], &[], int(0))), n).unwrap();
        assert_eq!(d, PermDistribution::point_mass(Permutation::identity(n)));
    }
}

#[test]
fn mu_shuffle_interleavings() {
    let d = exact_distribution(&ShuffleSpec::mu(vec![1, 2]), 3).unwrap();
    let expected: Vec<Permutation> = ["1 2 3", "2 1 3", "2 3 1"].iter().map(|s| perm(s)).collect();
    assert_eq!(d.weights().keys().cloned().collect::<Vec<_>>(), expected);
    assert!(d.weights().values().all(|p| *p == ratio(1, 3)));
    assert!(exact_distribution(&ShuffleSpec::mu(vec![1, 2]), 4).is_err());
}

#[test]
fn every_distribution_is_a_probability() {
    for spec in sample_specs() {
        for n in 1..=5 {
            if let ShuffleKind::Mu { mu } = &spec.kind {
                if mu.iter().sum::<usize>() != n {
                    continue;
                }
            }
            let d = exact_distribution(&spec, n).unwrap();
            assert!(d.is_probability(), "{spec} n={n}");
        }
    }
}

#[test]
fn rejects_unnormalised_specs() {
    assert!(exact_distribution(&ShuffleSpec::biased_riffle(vec![half(), ratio(1, 3)]), 3).is_err());
    assert!(exact_distribution(&ShuffleSpec::type_c(vec![int(2), int(-1)]), 3).is_err());
    assert!(exact_distribution(&ShuffleSpec::abg(pv(&[half()], &[], int(0))), 3).is_err());
    assert!(sample(&ShuffleSpec::type_c(vec![]), 3, 0, 10).is_err());
}

#[test]
fn riffle_probability_depends_on_inverse_descents_only() {
    let spec = ShuffleSpec::biased_riffle(vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]);
    for n in 1..=6 {
        let d = exact_distribution(&spec, n).unwrap();
        let mut by_class: BTreeMap<DescentSet, Rational> = BTreeMap::new();
        for w in Permutation::all(n) {
            let p = d.get(&w);
            let class = w.inverse().descents();
            match by_class.get(&class) {
                Some(seen) => assert_eq!(*seen, p, "{w}"),
                None => {
                    by_class.insert(class, p);
                }
            }
        }
    }
}

#[test]
fn reversal_is_conjugate_to_swapped_parameters() {
    let params = [
        pv(&[ratio(1, 3)], &[half()], ratio(1, 6)),
        pv(&[ratio(1, 4), ratio(1, 4)], &[ratio(1, 5)], ratio(3, 10)),
        pv(&[half(), half()], &[], int(0)),
    ];
    for p in &params {
        for n in 1..=5 {
            let reversed = exact_distribution(&ShuffleSpec::abg(p.clone()).reversed(true), n).unwrap();
            let swapped = exact_distribution(&ShuffleSpec::abg(p.swapped()), n).unwrap();
            assert_eq!(reversed.conjugate_by_longest(), swapped, "{p} n={n}");
            let cycles = |d: &PermDistribution| d.marginal(Permutation::cycle_type);
            let shapes = |d: &PermDistribution| d.marginal(|w| rsk_permutation(w).p.shape());
            assert_eq!(cycles(&reversed), cycles(&swapped));
            assert_eq!(shapes(&reversed), shapes(&swapped));
        }
    }
    // without the conjugation the laws differ as soon as n = 3
    let p = &params[0];
    let reversed = exact_distribution(&ShuffleSpec::abg(p.clone()).reversed(true), 3).unwrap();
    assert_ne!(reversed, exact_distribution(&ShuffleSpec::abg(p.swapped()), 3).unwrap());
}

#[test]
fn type_c_and_abg_share_cycle_and_shape_marginals() {
    for q in 1..=2i64 {
        let y = vec![ratio(1, q); q as usize];
        let ab = vec![ratio(1, 2 * q); q as usize];
        for n in 1..=5 {
            let tc = exact_distribution(&ShuffleSpec::type_c(y.clone()), n).unwrap();
            let abg = exact_distribution(&ShuffleSpec::abg(pv(&ab, &ab, int(0))), n).unwrap();
            assert_eq!(tc.marginal(Permutation::cycle_type), abg.marginal(Permutation::cycle_type), "q={q} n={n}");
            let shape = |w: &Permutation| rsk_permutation(w).p.shape();
            assert_eq!(tc.marginal(shape), abg.marginal(shape), "q={q} n={n}");
        }
    }
}

fn recording_law(d: &PermDistribution) -> BTreeMap<Tableau, Rational> {
    d.marginal(|w| rsk_permutation(w).q)
}

fn assert_recording_law(d: &PermDistribution, n: usize, expected: impl Fn(&Partition) -> Rational) {
    let law = recording_law(d);
    for lambda in Partition::all(n) {
        let value = expected(&lambda);
        for t in crate::combinatorics::enumerate_syt(&lambda) {
            assert_eq!(law.get(&t).cloned().unwrap_or_else(Rational::zero), value, "{t}");
        }
    }
}

#[test]
fn recording_tableau_laws() {
    let q = vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)];
    let y = vec![ratio(1, 3), ratio(2, 3)];
    let p = pv(&[ratio(1, 3)], &[ratio(1, 4)], ratio(5, 12));
    for n in 1..=5 {
        let d = exact_distribution(&ShuffleSpec::biased_riffle(q.clone()), n).unwrap();
        assert_recording_law(&d, n, |l| eval_schur(l, &q));
        let d = exact_distribution(&ShuffleSpec::type_c(y.clone()), n).unwrap();
        let two_n = rational::pow(&int(2), n);
        assert_recording_law(&d, n, |l| eval_stembridge_s(l, &y) / &two_n);
        let d = exact_distribution(&ShuffleSpec::abg(p.clone()), n).unwrap();
        assert_recording_law(&d, n, |l| eval_extended_schur(l, &p));
    }
    // the (α; ∅; 1-α) point where s̃_2 = (α² + 1)/2
    for a in [ratio(1, 3), ratio(3, 4)] {
        let p = pv(std::slice::from_ref(&a), &[], int(1) - &a);
        let d = exact_distribution(&ShuffleSpec::abg(p), 2).unwrap();
        let row = Tableau::new(vec![vec![1, 2]]);
        assert_eq!(recording_law(&d)[&row], (&a * &a + int(1)) / int(2));
    }
    for mu in [vec![1, 2], vec![2, 1, 2], vec![3, 2], vec![1, 1, 3]] {
        let n: usize = mu.iter().sum();
        let d = exact_distribution(&ShuffleSpec::mu(mu.clone()), n).unwrap();
        let total = from_biguint(&rational::multinomial(&mu));
        assert_recording_law(&d, n, |l| from_biguint(&kostka(l, &mu).unwrap()) / &total);
    }
}

#[test]
fn shape_law_and_type_c_shape_bound() {
    let p = pv(&[ratio(1, 2)], &[ratio(1, 3)], ratio(1, 6));
    for n in 1..=5 {
        let d = exact_distribution(&ShuffleSpec::abg(p.clone()), n).unwrap();
        let shapes = d.marginal(|w| rsk_permutation(w).p.shape());
        for lambda in Partition::all(n) {
            let expected = from_biguint(&f_lambda(&lambda)) * eval_extended_schur(&lambda, &p);
            assert_eq!(shapes.get(&lambda).cloned().unwrap_or_else(Rational::zero), expected);
        }
    }
    for k in 1..=2 {
        let y = vec![ratio(1, k as i64); k];
        for n in 1..=6 {
            let d = exact_distribution(&ShuffleSpec::type_c(y.clone()), n).unwrap();
            for w in d.weights().keys() {
                let shape = rsk_permutation(w).p.shape();
                assert!(shape[k] <= k, "{shape} for k={k}");
            }
        }
    }
}

#[test]
fn convolution_with_identity_and_iteration_laws() {
    let spec = ShuffleSpec::abg(pv(&[half()], &[], half()));
    let d = exact_distribution(&spec, 4).unwrap();
    let id = PermDistribution::point_mass(Permutation::identity(4));
    assert_eq!(d.convolve(&id).unwrap(), d);
    assert_eq!(iterate(&spec, 0, 4).unwrap(), id);
    for n in 1..=5 {
        for k in 1..=4 {
            let target = ShuffleSpec::abg(pv(&[rational::pow(&half(), k)], &[], int(1) - rational::pow(&half(), k)));
            assert_eq!(closed_form_iterate(&spec, k).unwrap(), target);
            assert_eq!(iterate(&spec, k, n).unwrap(), exact_distribution(&target, n).unwrap(), "n={n} k={k}");
        }
        let four = ShuffleSpec::k_riffle(4);
        assert_eq!(closed_form_iterate(&ShuffleSpec::k_riffle(2), 2).unwrap(), four);
        assert_eq!(iterate(&ShuffleSpec::k_riffle(2), 2, n).unwrap(), exact_distribution(&four, n).unwrap());
    }
    let a = ratio(2, 5);
    let p = pv(std::slice::from_ref(&a), &[], int(1) - &a);
    let squared = pv(&[&a * &a], &[], int(1) - &a * &a);
    assert_eq!(
        iterate(&ShuffleSpec::abg(p), 2, 4).unwrap(),
        exact_distribution(&ShuffleSpec::abg(squared), 4).unwrap()
    );
    assert!(closed_form_iterate(&ShuffleSpec::type_c(vec![int(1)]), 2).is_none());
}

#[test]
fn tuple_piles_match_iterated_convolution() {
    let params = [
        pv(&[half()], &[half()], int(0)),
        pv(&[ratio(1, 3)], &[ratio(1, 3)], ratio(1, 3)),
        pv(&[ratio(1, 4), ratio(1, 4)], &[ratio(1, 4)], ratio(1, 4)),
    ];
    for p in &params {
        for k in 1..=3 {
            for n in 1..=4 {
                let model = PileModel::abg_iterated(p, k);
                if model.word_count(n) > 200_000 {
                    continue;
                }
                let tuples = model.exact_distribution(n).unwrap();
                assert_eq!(tuples, iterate(&ShuffleSpec::abg(p.clone()), k, n).unwrap(), "{p} k={k} n={n}");
            }
        }
    }
}

#[test]
fn top_to_random_mixture() {
    for n in 1..=6 {
        for k in 0..=6 {
            let total = (0..=n).fold(Rational::zero(), |acc, j| acc + occupied_boxes_prob(j, k, n));
            assert_eq!(total, int(1));
        }
    }
    assert_eq!(occupied_boxes_prob(1, 1, 4), int(1));
    assert_eq!(empty_boxes_prob(3, 1, 4), int(1));
    // two balls in three boxes: same box with probability 1/3
    assert_eq!(occupied_boxes_prob(1, 2, 3), ratio(1, 3));
    for n in 2..=5 {
        let step = mu_distribution(&[1, n - 1]).unwrap();
        assert_eq!(exact_distribution(&ShuffleSpec::top_to_random(1), n).unwrap(), step);
        let mut acc = PermDistribution::point_mass(Permutation::identity(n));
        for k in 1..=6 {
            acc = acc.convolve(&step).unwrap();
            let mixture = top_to_random_distribution(k, n).unwrap();
            assert_eq!(mixture, acc, "n={n} k={k}");
            // the (n-j, 1^j) ordering has the same shape marginal
            let mut hooks = PermDistribution::new(n);
            for j in 0..=n.min(k) {
                let pj = occupied_boxes_prob(j, k, n);
                for (w, p) in mu_distribution(&hook_composition(n, j)).unwrap().weights() {
                    hooks.add(w.clone(), &pj * p);
                }
            }
            let shape = |w: &Permutation| rsk_permutation(w).p.shape();
            assert_eq!(hooks.marginal(shape), acc.marginal(shape));
        }
    }
}

#[test]
fn separation_examples() {
    assert!(PermDistribution::uniform(4).separation_distance().is_zero());
    let riffle = exact_distribution(&ShuffleSpec::k_riffle(2), 2).unwrap();
    let p = pv(&[half(), half()], &[], int(0));
    assert_eq!(riffle.separation_distance(), half());
    assert_eq!(separation_bound(&p, 1, 2), half());
    let point = exact_distribution(&ShuffleSpec::abg(pv(&[int(1)], &[], int(0))), 3).unwrap();
    assert_eq!(point.separation_distance(), int(1));
    for n in 2..=4 {
        for k in 1..=5 {
            let (sep, bound) = separation_report(&pv(&[half()], &[], half()), k, n).unwrap();
            assert!(sep <= bound, "n={n} k={k}");
        }
    }
}

#[test]
fn inverse_labelling_example() {
    let mut labels = vec![0; 11];
    for (cards, l) in [(&[2, 9][..], -2), (&[8], -1), (&[1, 4, 11], 0), (&[3, 5], 1), (&[6, 7, 10], 2)] {
        for &c in cards {
            labels[c - 1] = l;
        }
    }
    let deck = inverse_labelling_deck(&labels, &[4, 1, 11]).unwrap();
    assert_eq!(deck, vec![9, 2, 8, 4, 1, 11, 3, 5, 6, 7, 10]);
    let forward = Permutation::new(deck).unwrap().inverse();
    assert_eq!(forward, perm("5 2 7 4 8 9 10 3 1 11 6"));
    assert!(inverse_labelling_deck(&labels, &[4, 1]).is_err());
}

fn empirical(draws: &[Permutation]) -> BTreeMap<Permutation, usize> {
    let mut counts = BTreeMap::new();
    for w in draws {
        *counts.entry(w.clone()).or_insert(0) += 1;
    }
    counts
}

/// Every permutation's frequency lies within 4σ of its exact probability.
fn assert_close(draws: &[Permutation], exact: &PermDistribution) {
    let counts = empirical(draws);
    let total = draws.len() as f64;
    for w in Permutation::all(exact.n()) {
        let p = rational::to_f64(&exact.get(&w));
        let freq = *counts.get(&w).unwrap_or(&0) as f64 / total;
        let sigma = (p * (1.0 - p) / total).sqrt();
        assert!((freq - p).abs() <= 4.0 * sigma + 1e-12, "{w}: freq {freq} vs {p}");
    }
}

#[test]
fn sampling_is_deterministic_and_matches_exact_laws() {
    let spec = ShuffleSpec::k_riffle(2);
    let a = sample(&spec, 2, 11, 100_000).unwrap();
    assert_eq!(a, sample(&spec, 2, 11, 100_000).unwrap());
    assert_ne!(a, sample(&spec, 2, 12, 100_000).unwrap());
    assert_close(&a, &exact_distribution(&spec, 2).unwrap());
    let point = sample(&ShuffleSpec::abg(pv(&[int(1)], &[], int(0))), 5, 3, 1000).unwrap();
    assert!(point.iter().all(|w| *w == Permutation::identity(5)));
    for spec in sample_specs() {
        let n = match &spec.kind {
            ShuffleKind::Mu { mu } => mu.iter().sum(),
            _ => 3,
        };
        let draws = sample(&spec, n, 5, 60_000).unwrap();
        assert_close(&draws, &exact_distribution(&spec, n).unwrap());
    }
}

#[test]
fn physical_descriptions_agree_with_word_model() {
    let p = pv(&[ratio(1, 3)], &[ratio(1, 4), ratio(1, 6)], ratio(1, 4));
    let exact = exact_distribution(&ShuffleSpec::abg(p.clone()), 3).unwrap();
    assert_close(&sample_pile_cut(&p, 3, 9, 60_000).unwrap(), &exact);
    assert_close(&sample_inverse_labelling(&p, 3, 9, 60_000).unwrap(), &exact);
}

#[test]
fn tuple_piles_agree_statistically_with_repeated_sampling() {
    let p = pv(&[ratio(1, 3)], &[ratio(1, 3)], ratio(1, 3));
    let model = PileModel::abg_iterated(&p, 3);
    let cumulative = model.cumulative();
    let draws = sample_chunked_for_test(&model, &cumulative, 4, 60_000);
    assert_close(&draws, &iterate(&ShuffleSpec::abg(p), 3, 4).unwrap());
}

fn sample_chunked_for_test(model: &PileModel, cumulative: &[f64], n: usize, count: usize) -> Vec<Permutation> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    (0..count).map(|_| model.sample(n, cumulative, &mut rng)).collect()
}

#[test]
fn json_spec_round_trip() {
    for spec in sample_specs() {
        let text = serde_json::to_string(&spec).unwrap();
        let back: ShuffleSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec, "{text}");
    }
    let spec = ShuffleSpec::k_riffle(2);
    let json = exact_distribution(&spec, 3).unwrap().to_json(Some(&spec));
    let text = serde_json::to_string(&json).unwrap();
    assert!(text.contains("\"model\":\"biased-riffle\""));
    let back: DistributionJson = serde_json::from_str(&text).unwrap();
    assert_eq!(PermDistribution::from_json(&back).unwrap(), exact_distribution(&spec, 3).unwrap());
}
