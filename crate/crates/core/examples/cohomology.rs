//! `H^n(G, A)` for a few small groups, plus a coboundary witness.
//!
//! ```bash
//! cargo run --release --example cohomology
//! ```

use gcrossed::cohomology::{cohomology_group, differential, is_coboundary, Cochain, CoefficientModule};
use gcrossed::group::{build_group, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, modulus) in [("C2", 2), ("C4", 4), ("C2xC2", 2), ("S3", 6), ("Q8", 8)] {
        let g = build_group(&GroupSpec::builtin(name))?;
        let a = CoefficientModule::cyclic(modulus);
        let orders: Vec<_> = (0..=3)
            .map(|n| cohomology_group(&g, n, &a).map(|h| h.orders))
            .collect::<Result<_, _>>()?;
        println!("{name:>6} with Z/{modulus}: H^0..H^3 = {orders:?}");
    }

    // sign action of C2 on Z/3
    let c2 = build_group(&GroupSpec::builtin("C2"))?;
    let twisted = CoefficientModule::cyclic(3).with_action(&c2, vec![vec![0, 1, 2], vec![0, 2, 1]])?;
    println!("H^1(C2, Z/3 twisted) = {:?}", cohomology_group(&c2, 1, &twisted)?.orders);

    let c4 = build_group(&GroupSpec::builtin("C4"))?;
    let a = CoefficientModule::cyclic(4);
    let x = Cochain::from_values(&c4, &a, 1, vec![0, 1, 3, 2])?;
    let dx = differential(&x)?;
    let witness = is_coboundary(&dx).expect("d x is a coboundary");
    println!("d x recovered from witness: {}", differential(&witness)? == dx);
    Ok(())
}
