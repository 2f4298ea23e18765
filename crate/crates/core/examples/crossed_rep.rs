//! Crossed braidings on `Rep(G)`, one line per grading.
//!
//! ```bash
//! cargo run --release --example crossed_rep -- Q8
//! ```

use gcrossed::crossed::{enumerate_rep, gradings_of_rep, GradingSpec};
use gcrossed::group::{build_group, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Q8".into());
    let g = build_group(&GroupSpec::builtin(&name))?;
    for grading in gradings_of_rep(&g)? {
        let GradingSpec::Rep { h, grading_group } = &grading else { unreachable!() };
        let certs = enumerate_rep(&g, h)?;
        println!("H = {:?}, grading group of order {}: {} braidings", h.elements(), grading_group.order(), certs.len());
        for c in &certs {
            let w = &c.witness;
            println!("    L={:?} M={:?} B={:?}", w.l().elements(), w.m().elements(), w.b().table());
        }
    }
    Ok(())
}
