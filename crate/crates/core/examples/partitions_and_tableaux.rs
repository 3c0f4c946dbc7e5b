//! Partitions of a small n with their tableau counts.

use shufflesym::combinatorics::{enumerate_syt, f_lambda, kostka, mn_character, Partition};

fn main() -> shufflesym::Result<()> {
    let n = 5;
    println!("{:<12} {:>4} {:>4} {:>8} {:>10}", "lambda", "f", "syt", "z", "chi(1^n)");
    for lambda in Partition::all(n) {
        let syt = enumerate_syt(&lambda).len();
        let identity = Partition::new(vec![1; n])?;
        println!(
            "{:<12} {:>4} {:>4} {:>8} {:>10}",
            lambda.to_string(),
            f_lambda(&lambda),
            syt,
            lambda.z(),
            mn_character(&lambda, &identity)?
        );
    }

    let shape = Partition::new(vec![3, 2])?;
    println!("\nKostka numbers K_(3,2),mu:");
    for mu in Partition::all(5) {
        println!("  mu = {mu:<12} {}", kostka(&shape, mu.parts())?);
    }

    let t = &enumerate_syt(&shape)[0];
    println!("\nfirst SYT of shape {shape}: {t:?}, descents {:?}", t.descent_set().positions());
    Ok(())
}
