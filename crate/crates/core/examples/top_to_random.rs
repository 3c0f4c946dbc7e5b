//! RSK shape law after k top-to-random moves, drifting to the Plancherel law.

use shufflesym::combinatorics::Partition;
use shufflesym::cycle_index::rsk_shape_prob;
use shufflesym::harness::plancherel;
use shufflesym::rational::{format, to_f64};
use shufflesym::shuffles::{occupied_boxes_prob, ShuffleSpec};

fn main() -> shufflesym::Result<()> {
    let n = 4;
    print!("{:>3}", "k");
    for lambda in Partition::all(n) {
        print!(" {:>12}", lambda.to_string());
    }
    println!();
    for k in [0, 1, 2, 3, 5, 10, 20] {
        print!("{k:>3}");
        for lambda in Partition::all(n) {
            print!(" {:>12.6}", to_f64(&rsk_shape_prob(&ShuffleSpec::top_to_random(k), n, &lambda)?));
        }
        println!();
    }
    print!("{:>3}", "inf");
    for lambda in Partition::all(n) {
        print!(" {:>12.6}", to_f64(&plancherel(&lambda)));
    }
    println!();

    println!("\ndistinct cards moved after 3 moves, n={n}:");
    for j in 0..=n {
        println!("  {j}: {}", format(&occupied_boxes_prob(j, 3, n)));
    }
    Ok(())
}
