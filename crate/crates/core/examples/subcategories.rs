//! Fusion subcategories `S(L, M, B)` of the twisted center and their centralizers.
//!
//! ```bash
//! cargo run --release --example subcategories -- C2xC2 1
//! ```

use std::sync::Arc;

use gcrossed::center::TwistedGroupData;
use gcrossed::group::{build_group, GroupSpec};
use gcrossed::omega::stored_classes;
use gcrossed::subcat::{centralizer_subcat, contains, enumerate_subcats, fpdim};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "C2xC2".into());
    let k: usize = args.next().map_or(Ok(0), |s| s.parse())?;
    let g = build_group(&GroupSpec::builtin(&name))?;
    let omega = stored_classes(&name, &g)?.swap_remove(k);
    let data = Arc::new(TwistedGroupData::new(&g, omega)?);
    let subs = enumerate_subcats(&data)?;
    println!("{name}, omega #{k}: {} subcategories", subs.len());
    for s in &subs {
        let prime = centralizer_subcat(s)?;
        println!(
            "  L={:?} M={:?} FPdim {:>2}  centralizer FPdim {:>2}  self-centralizing {}",
            s.l().elements(),
            s.m().elements(),
            fpdim(s),
            fpdim(&prime),
            contains(&prime, s)? && contains(s, &prime)?,
        );
    }
    Ok(())
}
