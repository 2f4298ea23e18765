//! Builtin groups, subgroup lattices and quotients.
//!
//! ```bash
//! cargo run --example groups -- D8
//! ```

use gcrossed::group::{build_group, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D8".into());
    let g = build_group(&GroupSpec::builtin(&name))?;
    println!("{name}: order {}, exponent {}, abelian {}", g.order(), g.exponent(), g.is_abelian());
    println!("center {:?}", g.center().elements());
    for class in g.conjugacy_classes() {
        println!("  class of {:>2}: {:?}", class.representative, class.elements);
    }
    for n in g.normal_subgroups()? {
        let q = g.quotient(&n)?;
        println!("  G/{:?} has order {} (section {:?})", n.elements(), q.group.order(), q.section);
    }
    let ab = g.abelianization();
    println!("abelianization has order {}", ab.group.order());
    Ok(())
}
