//! Exact laws of each shuffle on a small deck, and their marginals.

use shufflesym::combinatorics::Permutation;
use shufflesym::rational::{format, ratio};
use shufflesym::rsk::rsk_permutation;
use shufflesym::shuffles::{exact_distribution, ShuffleSpec};
use shufflesym::symfun::ParamVector;

fn main() -> shufflesym::Result<()> {
    let n = 4;
    let specs = [
        ShuffleSpec::k_riffle(2),
        ShuffleSpec::k_riffle(2).reversed(true),
        ShuffleSpec::type_c(vec![ratio(1, 2), ratio(1, 2)]),
        ShuffleSpec::abg(ParamVector::new(vec![ratio(1, 3)], vec![ratio(1, 3)], ratio(1, 3))),
        ShuffleSpec::mu(vec![2, 2]),
        ShuffleSpec::top_to_random(3),
    ];
    for spec in specs {
        let d = exact_distribution(&spec, n)?;
        println!("{spec}: support {} of 24, identity {}", d.support_size(), format(&d.get(&Permutation::identity(n))));
        for (lambda, p) in d.marginal(Permutation::cycle_type) {
            print!("  {lambda}:{}", format(&p));
        }
        println!();
        for (shape, p) in d.marginal(|w| rsk_permutation(w).p.shape()) {
            print!("  rsk{shape}:{}", format(&p));
        }
        println!();
    }

    let json = exact_distribution(&ShuffleSpec::k_riffle(2), 3)?.to_json(Some(&ShuffleSpec::k_riffle(2)));
    println!("{}", serde_json::to_string_pretty(&json)?);
    Ok(())
}
