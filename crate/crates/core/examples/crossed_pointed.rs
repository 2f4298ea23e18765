//! Crossed braidings on `Vec(G, omega)` for every grading by a quotient.
//!
//! ```bash
//! cargo run --release --example crossed_pointed -- D8
//! ```

use std::sync::Arc;

use gcrossed::center::TwistedGroupData;
use gcrossed::crossed::{enumerate_pointed, kernel_is_central};
use gcrossed::group::{build_group, GroupSpec};
use gcrossed::omega::stored_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D8".into());
    let g = build_group(&GroupSpec::builtin(&name))?;
    for (k, omega) in stored_classes(&name, &g)?.into_iter().enumerate() {
        let data = Arc::new(TwistedGroupData::new(&g, omega)?);
        let mut counts = Vec::new();
        for n in g.normal_subgroups()? {
            let pi = g.quotient(&n)?.projection;
            let tag = if kernel_is_central(&pi) { "" } else { "*" };
            counts.push(format!("{:?}{tag}:{}", n.elements(), enumerate_pointed(&data, &pi)?.len()));
        }
        println!("omega #{k}: {}", counts.join("  "));
    }
    println!("(* marks kernels outside the center)");
    Ok(())
}
