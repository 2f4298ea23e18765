//! Simple objects of `Z(Vec(G, omega))` for every stored cocycle.
//!
//! ```bash
//! cargo run --release --example center_census -- S3
//! ```

use gcrossed::center::{simple_census, TwistedGroupData};
use gcrossed::group::{build_group, GroupSpec};
use gcrossed::omega::stored_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let g = build_group(&GroupSpec::builtin(&name))?;
    for (k, omega) in stored_classes(&name, &g)?.into_iter().enumerate() {
        let data = TwistedGroupData::new(&g, omega)?;
        let census = simple_census(&data)?;
        let per_class: Vec<_> = census.labels.iter().map(|l| (l.representative, l.simple_count)).collect();
        println!(
            "omega #{k}: {} simples, sum FPdim^2 = {}, per class {per_class:?}",
            census.simple_count, census.fpdim_square_sum
        );
    }
    Ok(())
}
