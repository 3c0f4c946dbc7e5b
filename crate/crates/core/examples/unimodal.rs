//! Unimodal permutations and their generating function in u, t and the x_i.

use shufflesym::combinatorics::enumerate_unimodal;
use shufflesym::cycle_index::unimodal_gf;

fn main() -> shufflesym::Result<()> {
    let gf = unimodal_gf(6)?;
    for n in 1..=4 {
        println!("u^{n}: {}", gf.display_coeff(n));
    }
    for n in 1..=8 {
        let mut per_max = vec![0; n];
        for (_, max) in enumerate_unimodal(n) {
            per_max[max - 1] += 1;
        }
        println!("n={n}: {:>3} unimodal, by position of max {per_max:?}", per_max.iter().sum::<usize>());
    }
    Ok(())
}
