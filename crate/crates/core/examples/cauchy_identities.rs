//! Both sides of the Cauchy-type identities, degree by degree.

use shufflesym::rational::ratio;
use shufflesym::symfun::{cauchy_expansion, CauchyKind, ParamVector};

fn main() -> shufflesym::Result<()> {
    let params = ParamVector::new(vec![ratio(1, 2)], vec![ratio(1, 4)], ratio(1, 4));
    for kind in CauchyKind::ALL {
        let expansion = cauchy_expansion(kind, 6, 2, 2, Some(&params))?;
        let terms: usize = expansion.lhs.iter().map(|p| p.len()).sum();
        println!("{:<16} holds={} terms={terms}", kind.name(), expansion.holds());
    }
    let classic = cauchy_expansion(CauchyKind::Classic, 2, 2, 2, None)?;
    println!("\nclassic, degree 2 piece:\n  {}", classic.lhs[2]);
    Ok(())
}
