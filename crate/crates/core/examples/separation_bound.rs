//! Exact separation distance after repeated shuffles next to its bound.

use shufflesym::rational::{format, ratio, to_f64};
use shufflesym::shuffles::separation_report;
use shufflesym::symfun::ParamVector;

fn main() -> shufflesym::Result<()> {
    let n = 4;
    for p in [
        ParamVector::new(vec![ratio(1, 2)], vec![], ratio(1, 2)),
        ParamVector::new(vec![ratio(3, 4)], vec![], ratio(1, 4)),
        ParamVector::new(vec![ratio(1, 2), ratio(1, 2)], vec![], ratio(0, 1)),
    ] {
        println!("{p}, n={n}");
        for k in 1..=8 {
            let (sep, bound) = separation_report(&p, k, n)?;
            println!("  k={k}: {:>22} <= {:<16} ({:.4} <= {:.4})", format(&sep), format(&bound), to_f64(&sep), to_f64(&bound));
        }
    }
    Ok(())
}
