//! Normalized 3-cocycles with values in roots of unity, one per class of
//! `H^3(G, C^x)`, and the precomputed tables shipped for the builtin battery.

use serde::{Deserialize, Serialize};

use crate::cohomology::{cohomology_group, is_unity_coboundary, Cochain, CocycleFile, CoefficientModule};
use crate::error::{Error, Result};
use crate::group::{abelian_increment, FiniteGroup};

/// Builtin groups with shipped cocycle tables.
pub const BATTERY: [&str; 8] = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D8", "Q8"];

/// The zero 3-cocycle with values in `mu_1`.
pub fn trivial(group: &FiniteGroup) -> Cochain {
    Cochain::zero(group, &CoefficientModule::cyclic(1), 3)
}

/// One `mu_|G|`-valued representative for each class of `H^3(G, C^x)`.
///
/// Classes of `H^3(G, mu_|G|)` are walked in mixed-radix order over the
/// computed generators and kept when they differ in `C^x` from everything kept
/// so far, so the trivial class comes first.
pub fn unity_classes(group: &FiniteGroup) -> Result<Vec<Cochain>> {
    let module = CoefficientModule::cyclic(group.order());
    let h = cohomology_group(group, 3, &module)?;
    let radix: Vec<usize> = h.orders.iter().map(|&o| o as usize).collect();
    let mut digits = vec![0usize; radix.len()];
    let mut kept: Vec<Cochain> = Vec::new();
    loop {
        let mut c = Cochain::zero(group, &module, 3);
        for (rep, &k) in h.representatives.iter().zip(&digits) {
            if k != 0 {
                c = c.add(&rep.scale(k))?;
            }
        }
        let mut new = true;
        for k in &kept {
            if is_unity_coboundary(&c.sub(k)?)? {
                new = false;
                break;
            }
        }
        if new {
            kept.push(c);
        }
        if !abelian_increment(&mut digits, &radix) {
            break;
        }
    }
    Ok(kept)
}

/// On-disk form of [`unity_classes`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OmegaFixture {
    pub group: String,
    pub modulus: usize,
    pub classes: Vec<CocycleFile>,
}

impl OmegaFixture {
    pub fn from_classes(name: &str, group: &FiniteGroup, classes: &[Cochain]) -> Self {
        OmegaFixture {
            group: name.to_string(),
            modulus: group.order(),
            classes: classes.iter().map(CocycleFile::from_cochain).collect(),
        }
    }

    pub fn cochains(&self, group: &FiniteGroup) -> Result<Vec<Cochain>> {
        self.classes.iter().map(|f| f.to_cochain(group)).collect()
    }
}

fn fixture_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "C2" => include_str!("../fixtures/omega/C2.json"),
        "C3" => include_str!("../fixtures/omega/C3.json"),
        "C4" => include_str!("../fixtures/omega/C4.json"),
        "C6" => include_str!("../fixtures/omega/C6.json"),
        "C2xC2" => include_str!("../fixtures/omega/C2xC2.json"),
        "S3" => include_str!("../fixtures/omega/S3.json"),
        "D8" => include_str!("../fixtures/omega/D8.json"),
        "Q8" => include_str!("../fixtures/omega/Q8.json"),
        _ => return None,
    })
}

/// The shipped representatives for a battery group, in class order.
pub fn stored_classes(name: &str, group: &FiniteGroup) -> Result<Vec<Cochain>> {
    let text = fixture_text(name)
        .ok_or_else(|| Error::Parse(format!("no stored 3-cocycles for group `{name}`")))?;
    let fixture: OmegaFixture =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture {name}: {e}")))?;
    fixture.cochains(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::is_cocycle;
    use crate::group::{build_group, GroupSpec};

    #[test]
    fn small_class_counts() {
        for (name, count) in [("C2", 2), ("C3", 3), ("C4", 4), ("S3", 6), ("C2xC2", 8)] {
            let g = build_group(&GroupSpec::builtin(name)).unwrap();
            let classes = unity_classes(&g).unwrap();
            assert_eq!(classes.len(), count, "{name}");
            assert!(classes[0].is_zero());
            assert!(classes.iter().all(|c| is_cocycle(c) && c.is_normalized()));
        }
    }

    #[test]
    fn stored_match_recomputation() {
        for name in ["C2", "C3", "C4", "C6", "C2xC2", "S3"] {
            let g = build_group(&GroupSpec::builtin(name)).unwrap();
            assert_eq!(stored_classes(name, &g).unwrap(), unity_classes(&g).unwrap(), "{name}");
        }
    }
}
