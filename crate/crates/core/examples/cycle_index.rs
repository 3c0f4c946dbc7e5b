//! Cycle indices as truncated series, and the numbers read off them.

use shufflesym::combinatorics::Partition;
use shufflesym::cycle_index::{cycle_index, cycle_type_prob, expected_fixed_points, fixed_points_from_series};
use shufflesym::rational::{format, int};
use shufflesym::shuffles::ShuffleSpec;

fn main() -> shufflesym::Result<()> {
    let riffle = ShuffleSpec::k_riffle(2);
    let ci = cycle_index(&riffle, 4)?;
    for n in 0..=4 {
        println!("u^{n}: {}", ci.display_coeff(n));
    }

    let reversed = riffle.clone().reversed(true);
    println!("\nfixed points, 2-riffle vs reversed:");
    let rev_ci = cycle_index(&reversed, 8)?;
    for n in 1..=8 {
        let fwd = expected_fixed_points(&riffle, n)?;
        let rev = expected_fixed_points(&reversed, n)?;
        assert_eq!(rev, fixed_points_from_series(&rev_ci, n));
        println!("  n={n}: {:>8} {:>8}", format(&fwd), format(&rev));
    }

    let type_c = ShuffleSpec::type_c(vec![int(1)]);
    let three_cycle = Partition::new(vec![3])?;
    println!("\ntypeC(1), P(3-cycle on 3 cards) = {}", format(&cycle_type_prob(&type_c, 3, &three_cycle)?));
    let same = cycle_index(&type_c, 8)? == cycle_index(&type_c.clone().reversed(true), 8)?;
    println!("typeC index unchanged by reversal: {same}");
    Ok(())
}
