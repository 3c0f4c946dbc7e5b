//! Seeded sampling, the physical pile description, and empirical frequencies.

use std::collections::BTreeMap;

use shufflesym::harness::format_float;
use shufflesym::rational::{ratio, to_f64};
use shufflesym::shuffles::{exact_distribution, sample, sample_pile_cut, ShuffleSpec};
use shufflesym::symfun::ParamVector;

fn main() -> shufflesym::Result<()> {
    let p = ParamVector::new(vec![ratio(1, 2)], vec![ratio(1, 4)], ratio(1, 4));
    let spec = ShuffleSpec::abg(p.clone());
    let n = 3;
    let count = 100_000;
    let exact = exact_distribution(&spec, n)?;
    let words = sample(&spec, n, 42, count)?;
    let cut = sample_pile_cut(&p, n, 42, count)?;
    assert_eq!(words, sample(&spec, n, 42, count)?);

    let tally = |draws: &[shufflesym::combinatorics::Permutation]| {
        let mut m = BTreeMap::new();
        for w in draws {
            *m.entry(w.clone()).or_insert(0usize) += 1;
        }
        m
    };
    let (a, b) = (tally(&words), tally(&cut));
    println!("{:<8} {:>16} {:>16} {:>16}", "w", "exact", "word model", "pile cut");
    for (w, prob) in exact.weights() {
        let freq = |m: &BTreeMap<_, usize>| format_float(*m.get(w).unwrap_or(&0) as f64 / count as f64);
        println!("{:<8} {:>16} {:>16} {:>16}", w.to_string(), format_float(to_f64(prob)), freq(&a), freq(&b));
    }
    Ok(())
}
