//! Extension, zesting and fully faithful lifting obstructions.

use gcrossed::center::invertibles_of_center;
use gcrossed::cohomology::{cohomology_group, Cochain, CoefficientModule};
use gcrossed::group::{build_group, GroupSpec};
use gcrossed::obstruction::{extension_cocycle, fibered_enrichment_extends, fully_faithful_obstruction, zesting_lift_exists};

fn group(name: &str) -> gcrossed::Result<gcrossed::group::FiniteGroup> {
    build_group(&GroupSpec::builtin(name))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (e, n) in [("C4", vec![0, 2]), ("C2xC2", vec![0, 2]), ("S3", vec![0, 3, 4]), ("Q8", vec![0, 1])] {
        let g = group(e)?;
        let n = g.subgroup(&n)?;
        let ext = extension_cocycle(&g, &n)?;
        let report = fibered_enrichment_extends(&g, &n)?;
        println!(
            "{e} over {:?}: section {:?}, extends {} ({})",
            n.elements(),
            ext.section(),
            report.extends,
            report.reason
        );
    }

    let c2 = group("C2")?;
    for n in ["S3", "C2", "Q8"] {
        let inv = invertibles_of_center(&group(n)?)?;
        let module = CoefficientModule::from_group(inv.product.clone())?;
        let h = cohomology_group(&c2, 2, &module)?;
        let lifts: Vec<bool> = h
            .representatives
            .iter()
            .map(|c| zesting_lift_exists(&inv, c))
            .collect::<Result<_, _>>()?;
        println!("zesting C2 by N = {n}: H^2 orders {:?}, generators lift {lifts:?}", h.orders);
    }

    let a = CoefficientModule::cyclic(2);
    let nontrivial = Cochain::from_fn(&c2, &a, 2, |x| usize::from(x == [1, 1]))?;
    for c in [Cochain::zero(&c2, &a, 2), nontrivial] {
        println!("fully faithful obstruction: {:?}", fully_faithful_obstruction(&c)?);
    }
    Ok(())
}
