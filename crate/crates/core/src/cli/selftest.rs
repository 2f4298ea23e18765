//! The invariant suite behind `gcrossed selftest`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::center::{beta_restricted_cocycle, simple_census, TwistedGroupData};
use crate::cohomology::{differential, Cochain, CoefficientModule};
use crate::crossed::{check_theorem_conditions, enumerate_pointed, gradings_of_rep, Ambient, GradingSpec};
use crate::error::{Error, Result};
use crate::group::{find_isomorphism, FiniteGroup, GroupHom};
use crate::obstruction::{extension_cocycle, fibered_enrichment_extends};
use crate::omega::{stored_classes, unity_classes, BATTERY};
use crate::subcat::{centralizer_subcat, enumerate_subcats, fpdim};

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub group: String,
    pub omega: Option<usize>,
    pub property: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub properties: Vec<PropertyResult>,
}

type Check = std::result::Result<(), String>;

fn verdict(group: &str, omega: Option<usize>, property: &'static str, outcome: Result<Check>) -> PropertyResult {
    let (pass, detail) = match outcome {
        Ok(Ok(())) => (true, None),
        Ok(Err(msg)) => (false, Some(msg)),
        Err(e) => (false, Some(e.to_string())),
    };
    PropertyResult {
        group: group.to_string(),
        omega,
        property,
        pass,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub(super) fn run(seed: u64, only: Option<&str>, omega_file: Option<&str>) -> Result<SelftestReport> {
    let targets: Vec<(String, FiniteGroup, Vec<(Cochain, bool)>)> = match (only, omega_file) {
        (None, Some(_)) => return Err(Error::Parse("--omega needs --group".into())),
        (None, None) => BATTERY
            .iter()
            .map(|&name| {
                let (g, _) = super::load_group(name)?;
                let classes = stored_classes(name, &g)?.into_iter().map(|c| (c, true)).collect();
                Ok((name.to_string(), g, classes))
            })
            .collect::<Result<_>>()?,
        (Some(arg), file) => {
            let (g, name) = super::load_group(arg)?;
            let classes = match (file, name.as_deref()) {
                (Some(path), _) => vec![(super::load_cocycle_file(path)?.to_cochain(&g)?, false)],
                (None, Some(n)) if BATTERY.contains(&n) => stored_classes(n, &g)?.into_iter().map(|c| (c, true)).collect(),
                (None, _) => unity_classes(&g)?.into_iter().map(|c| (c, true)).collect(),
            };
            vec![(arg.to_string(), g, classes)]
        }
    };
    let mut properties = Vec::new();
    for (name, g, classes) in &targets {
        properties.extend(group_properties(name, g, seed));
        let per_omega: Vec<Vec<PropertyResult>> = classes
            .par_iter()
            .enumerate()
            .map(|(k, (omega, validate))| omega_properties(name, g, k, omega, *validate))
            .collect();
        properties.extend(per_omega.into_iter().flatten());
    }
    let passed = properties.iter().filter(|p| p.pass).count();
    Ok(SelftestReport {
        seed,
        passed,
        failed: properties.len() - passed,
        properties,
    })
}

fn group_properties(name: &str, g: &FiniteGroup, seed: u64) -> Vec<PropertyResult> {
    let mut out = Vec::new();
    out.push(verdict(name, None, "associativity", Ok(associativity(g))));
    out.push(verdict(name, None, "d-squared-zero", d_squared(g, seed)));
    out.push(verdict(name, None, "extension-cocycle-identity", extension_identity(g)));
    out.push(verdict(name, None, "fibered-matches-isomorphism", fibered_oracle(g)));
    out.push(verdict(name, None, "rep-gradings-count", rep_gradings(g)));
    out
}

fn associativity(g: &FiniteGroup) -> Check {
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    return Err(format!("({a} {b}) {c} != {a} ({b} {c})"));
                }
            }
        }
    }
    Ok(())
}

fn d_squared(g: &FiniteGroup, seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let module = CoefficientModule::cyclic(4);
    for degree in 0..=2 {
        for trial in 0..3 {
            let c = Cochain::random(g, &module, degree, false, &mut rng)?;
            if !differential(&differential(&c)?)?.is_zero() {
                return Ok(Err(format!("d(d c) != 0 for random degree-{degree} cochain #{trial}")));
            }
        }
    }
    Ok(Ok(()))
}

fn extension_identity(g: &FiniteGroup) -> Result<Check> {
    for n in g.normal_subgroups()? {
        if !extension_cocycle(g, &n)?.satisfies_cocycle_identity() {
            return Ok(Err(format!("identity fails for N = {:?}", n.elements())));
        }
    }
    Ok(Ok(()))
}

fn fibered_oracle(g: &FiniteGroup) -> Result<Check> {
    for n in g.normal_subgroups()? {
        let verdict = fibered_enrichment_extends(g, &n)?.extends;
        let q = g.quotient(&n)?.group;
        let product = g.subgroup_as_group(&n).direct_product(&q);
        if verdict != find_isomorphism(g, &product).is_some() {
            return Ok(Err(format!("N = {:?}: verdict {verdict} disagrees with isomorphism search", n.elements())));
        }
    }
    Ok(Ok(()))
}

fn rep_gradings(g: &FiniteGroup) -> Result<Check> {
    let z = g.center();
    let expected = g.subgroup_as_group(&z).all_subgroups()?.len();
    let got = gradings_of_rep(g)?.len();
    Ok(ensure(got == expected, || format!("{got} gradings for {expected} subgroups of Z(G)")))
}

fn omega_properties(name: &str, g: &FiniteGroup, k: usize, omega: &Cochain, validate: bool) -> Vec<PropertyResult> {
    let cocycle = (|| -> Result<Check> {
        Ok(if !omega.is_normalized() {
            Err("omega is not normalized".into())
        } else if !differential(omega)?.is_zero() {
            Err("d(omega) != 0".into())
        } else {
            Ok(())
        })
    })();
    let valid = matches!(cocycle, Ok(Ok(())));
    let mut out = vec![verdict(name, Some(k), "omega-cocycle", cocycle)];
    let data = if validate || valid {
        match TwistedGroupData::new(g, omega.clone()) {
            Ok(d) => d,
            Err(e) => {
                out.push(verdict(name, Some(k), "omega-accepted", Err(e)));
                return out;
            }
        }
    } else {
        TwistedGroupData::new_unchecked(g, omega.clone())
    };
    out.push(verdict(name, Some(k), "beta-cocycle", Ok(beta_cocycles(&data))));
    if !valid {
        // the remaining properties presuppose a cocycle
        return out;
    }
    let data = Arc::new(data);
    out.push(verdict(name, Some(k), "census-dimension", census(&data)));
    out.push(verdict(name, Some(k), "double-centralizer", double_centralizer(&data)));
    out.push(verdict(name, Some(k), "crossed-pointed-unique", pointed_unique(&data)));
    if data.is_trivial() {
        out.push(verdict(name, Some(k), "theorem-filter-pointed", theorem_filter(&data)));
    }
    out
}

fn beta_cocycles(data: &TwistedGroupData) -> Check {
    for class in data.group().conjugacy_classes() {
        if let Err(e) = beta_restricted_cocycle(data, class.representative) {
            return Err(e.to_string());
        }
    }
    Ok(())
}

fn census(data: &TwistedGroupData) -> Result<Check> {
    let n = data.group().order();
    let c = simple_census(data)?;
    Ok(ensure(c.fpdim_square_sum == n * n, || {
        format!("sum of FPdim^2 is {} instead of {}", c.fpdim_square_sum, n * n)
    }))
}

fn double_centralizer(data: &Arc<TwistedGroupData>) -> Result<Check> {
    let n = data.group().order();
    let subs = enumerate_subcats(data)?;
    for s in &subs {
        let prime = centralizer_subcat(s).map_err(|v| Error::NotACocycle(v.to_string()))?;
        if fpdim(s) * fpdim(&prime) != n * n {
            return Ok(Err(format!("FPdim product fails for L = {:?}, M = {:?}", s.l().elements(), s.m().elements())));
        }
        if !subs.contains(&prime) {
            return Ok(Err(format!("centralizer of L = {:?}, M = {:?} is not enumerated", s.l().elements(), s.m().elements())));
        }
        let back = centralizer_subcat(&prime).map_err(|v| Error::NotACocycle(v.to_string()))?;
        if &back != s {
            return Ok(Err(format!("s'' != s for L = {:?}, M = {:?}", s.l().elements(), s.m().elements())));
        }
    }
    Ok(Ok(()))
}

fn pointed_unique(data: &Arc<TwistedGroupData>) -> Result<Check> {
    let certs = enumerate_pointed(data, &GroupHom::identity(data.group()))?;
    Ok(ensure(certs.len() == 1 && certs[0].checks.all(), || {
        format!("{} certificates for the full grading", certs.len())
    }))
}

fn theorem_filter(data: &Arc<TwistedGroupData>) -> Result<Check> {
    let g = data.group();
    let subs = enumerate_subcats(data)?;
    let ambient = Ambient::pointed(data.clone());
    for k in g.normal_subgroups()? {
        let pi = g.quotient(&k)?.projection;
        let grading = GradingSpec::pointed(pi.clone())?;
        let mut filtered = Vec::new();
        for s in &subs {
            if check_theorem_conditions(&ambient, &grading, s)?.all() {
                filtered.push(s.clone());
            }
        }
        let direct: Vec<_> = enumerate_pointed(data, &pi)?.into_iter().map(|c| c.witness).collect();
        if filtered != direct {
            return Ok(Err(format!(
                "kernel {:?}: {} filtered vs {} enumerated",
                k.elements(),
                filtered.len(),
                direct.len()
            )));
        }
    }
    Ok(Ok(()))
}
