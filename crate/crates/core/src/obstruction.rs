//! Lifting obstructions for enrichments: extending a fibered enrichment along
//! `1 -> N -> E -> G -> 1`, zesting lifts, and the fully faithful case.

use std::fmt;

use serde::Serialize;

use crate::center::InvertiblesOfCenter;
use crate::cohomology::{count_splittings, is_coboundary, is_cocycle, pushforward, Cochain, CoefficientModule};
use crate::error::{Error, Result};
use crate::group::{count_homomorphisms, FiniteGroup, Quotient, Subgroup};

/// An extension `1 -> N -> E -> G -> 1` with the minimal-id section
/// `lambda` and its cocycle `lambda_g lambda_h = lambda_{gh} n_{g,h}`.
#[derive(Debug, Clone)]
pub struct ExtensionData {
    pub extension: FiniteGroup,
    pub normal: Subgroup,
    pub quotient: Quotient,
    /// `n[g * |G| + h]`, an element of `N` as an id of `E`.
    pub n: Vec<usize>,
}

impl ExtensionData {
    pub fn section(&self) -> &[usize] {
        &self.quotient.section
    }

    pub fn quotient_group(&self) -> &FiniteGroup {
        &self.quotient.group
    }

    pub fn n_at(&self, g: usize, h: usize) -> usize {
        self.n[g * self.quotient.group.order() + h]
    }

    /// `n_{gh,k} (lambda_k^-1 n_{g,h} lambda_k) = n_{g,hk} n_{h,k}` for all triples.
    pub fn satisfies_cocycle_identity(&self) -> bool {
        cocycle_identity_holds(&self.extension, &self.quotient.group, &self.quotient.section, |g, h| self.n_at(g, h))
    }
}

fn cocycle_identity_holds(e: &FiniteGroup, q: &FiniteGroup, lambda: &[usize], n: impl Fn(usize, usize) -> usize) -> bool {
    q.elements().all(|g| {
        q.elements().all(|h| {
            q.elements().all(|k| {
                let twisted = e.conj(e.inv(lambda[k]), n(g, h));
                e.mul(n(q.mul(g, h), k), twisted) == e.mul(n(g, q.mul(h, k)), n(h, k))
            })
        })
    })
}

fn cocycle_for_section(e: &FiniteGroup, q: &Quotient, lambda: &[usize]) -> Vec<usize> {
    let g = &q.group;
    let mut n = Vec::with_capacity(g.order() * g.order());
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            n.push(e.mul(e.inv(lambda[ab]), e.mul(lambda[a], lambda[b])));
        }
    }
    n
}

pub fn extension_cocycle(e: &FiniteGroup, normal: &Subgroup) -> Result<ExtensionData> {
    let quotient = e.quotient(normal)?;
    let n = cocycle_for_section(e, &quotient, &quotient.section);
    let data = ExtensionData {
        extension: e.clone(),
        normal: normal.clone(),
        quotient,
        n,
    };
    debug_assert!(data.n.iter().all(|&x| normal.contains(x)));
    debug_assert!(data.satisfies_cocycle_identity());
    Ok(data)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionVerdict {
    /// Some coset of `N` has no element centralizing `N`.
    NotCentral,
    /// A centralizing section exists but its cocycle is nontrivial in `H^2(G, Z(N))`.
    NontrivialClass,
    Split,
}

impl fmt::Display for ExtensionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionVerdict::NotCentral => "not-central",
            ExtensionVerdict::NontrivialClass => "nontrivial-class",
            ExtensionVerdict::Split => "split",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberedReport {
    pub extends: bool,
    pub verdict: ExtensionVerdict,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsor_count: Option<u128>,
}

/// Whether a fibered enrichment on `Rep(N)` extends to one over `Rep(E)`.
///
/// That happens iff `E = N x G`. The test picks, per coset, the smallest
/// element centralizing `N`; if every coset has one the resulting cocycle is
/// valued in `Z(N)` and the answer is whether its class vanishes.
pub fn fibered_enrichment_extends(e: &FiniteGroup, normal: &Subgroup) -> Result<FiberedReport> {
    let quotient = e.quotient(normal)?;
    let g = &quotient.group;
    let mut lambda = vec![usize::MAX; g.order()];
    for x in e.elements() {
        let c = quotient.projection.apply(x);
        if lambda[c] == usize::MAX && normal.elements().iter().all(|&y| e.commutes(x, y)) {
            lambda[c] = x;
        }
    }
    if let Some(c) = lambda.iter().position(|&x| x == usize::MAX) {
        return Ok(FiberedReport {
            extends: false,
            verdict: ExtensionVerdict::NotCentral,
            reason: format!(
                "N is not centralized by a complement: no element of the coset of {} commutes with N",
                quotient.section[c]
            ),
            torsor_count: None,
        });
    }
    // equals Z(N) once N and the section generate E
    let z = e.center().intersection(normal);
    let zg = e.subgroup_as_group(&z);
    let n = cocycle_for_section(e, &quotient, &lambda);
    let module = CoefficientModule::from_group(zg.clone())?;
    let values = n
        .iter()
        .map(|&x| z.index_of(x).ok_or(Error::Overflow("cocycle left Z(N)")))
        .collect::<Result<Vec<_>>>()?;
    let class = Cochain::from_values(g, &module, 2, values)?;
    if is_coboundary(&class).is_none() {
        return Ok(FiberedReport {
            extends: false,
            verdict: ExtensionVerdict::NontrivialClass,
            reason: format!("the extension class in H^2(G, Z(N)) with |Z(N)| = {} is nonzero", z.order()),
            torsor_count: None,
        });
    }
    let count = count_homomorphisms(g, &zg) as u128;
    Ok(FiberedReport {
        extends: true,
        verdict: ExtensionVerdict::Split,
        reason: format!("E = N x G; extensions form a torsor over Hom(G, Z(N)) of order {count}"),
        torsor_count: Some(count),
    })
}

fn check_trivial_cocycle(omega: &Cochain) -> Result<()> {
    if omega.degree() != 2 {
        return Err(Error::NotACocycle(format!("expected a 2-cochain, got degree {}", omega.degree())));
    }
    if !omega.module().is_trivial_action() {
        return Err(Error::NonTrivialAction);
    }
    if !is_cocycle(omega) {
        return Err(Error::NotACocycle("d(omega) is nonzero".into()));
    }
    Ok(())
}

/// Whether zesting by `omega in Z^2(G, dual(N) x Z(N))` lifts, i.e. whether
/// the pushforward to `Z(N)` is a coboundary.
pub fn zesting_lift_exists(inv: &InvertiblesOfCenter, omega: &Cochain) -> Result<bool> {
    if omega.module().group() != &inv.product {
        return Err(Error::InvalidModule("omega must take values in dual(N) x Z(N)".into()));
    }
    check_trivial_cocycle(omega)?;
    let target = CoefficientModule::from_group(inv.center_group.clone())?;
    let pushed = pushforward(omega, &inv.projection, &target)?;
    Ok(is_coboundary(&pushed).is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullyFaithfulReport {
    pub vanishes: bool,
    pub splitting_count: u128,
}

/// The obstruction class `[omega] in H^2(G, A)` for a fully faithful enrichment
/// together with the number of liftings when it vanishes.
pub fn fully_faithful_obstruction(omega: &Cochain) -> Result<FullyFaithfulReport> {
    check_trivial_cocycle(omega)?;
    Ok(FullyFaithfulReport {
        vanishes: is_coboundary(omega).is_some(),
        splitting_count: count_splittings(omega)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::invertibles_of_center;
    use crate::group::{build_group, GroupSpec};

    fn g(name: &str) -> FiniteGroup {
        build_group(&GroupSpec::builtin(name)).unwrap()
    }

    #[test]
    fn extension_cocycles() {
        let c4 = g("C4");
        let d = extension_cocycle(&c4, &c4.subgroup(&[0, 2]).unwrap()).unwrap();
        assert_eq!(d.section(), &[0, 1]);
        assert_eq!(d.n_at(1, 1), 2);
        let v4 = g("C2xC2");
        let d = extension_cocycle(&v4, &v4.subgroup(&[0, 2]).unwrap()).unwrap();
        assert!(d.n.iter().all(|&x| x == 0));
        let s3 = g("S3");
        let d = extension_cocycle(&s3, &s3.subgroup(&[0, 3, 4]).unwrap()).unwrap();
        assert!(d.satisfies_cocycle_identity());
        assert!(extension_cocycle(&s3, &s3.subgroup(&[0, 1]).unwrap()).is_err());
    }

    #[test]
    fn fibered_examples() {
        let c4 = g("C4");
        let r = fibered_enrichment_extends(&c4, &c4.subgroup(&[0, 2]).unwrap()).unwrap();
        assert_eq!(r.verdict, ExtensionVerdict::NontrivialClass);
        let v4 = g("C2xC2");
        let r = fibered_enrichment_extends(&v4, &v4.subgroup(&[0, 2]).unwrap()).unwrap();
        assert_eq!((r.extends, r.torsor_count), (true, Some(2)));
        let s3 = g("S3");
        let r = fibered_enrichment_extends(&s3, &s3.subgroup(&[0, 3, 4]).unwrap()).unwrap();
        assert_eq!(r.verdict, ExtensionVerdict::NotCentral);
        // nonabelian direct factor: S3 x C2 over S3
        let e = g("S3xC2");
        let n = e.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let r = fibered_enrichment_extends(&e, &n).unwrap();
        assert_eq!((r.extends, r.torsor_count), (true, Some(1)));
    }

    #[test]
    fn zesting_examples() {
        let inv = invertibles_of_center(&g("C2")).unwrap();
        let c2 = g("C2");
        let module = CoefficientModule::from_group(inv.product.clone()).unwrap();
        // product id 1 = (trivial character, nontrivial central element)
        let omega = Cochain::from_fn(&c2, &module, 2, |a| usize::from(a == [1, 1])).unwrap();
        assert!(!zesting_lift_exists(&inv, &omega).unwrap());
        let chi = Cochain::from_fn(&c2, &module, 2, |a| if a == [1, 1] { 2 } else { 0 }).unwrap();
        assert!(zesting_lift_exists(&inv, &chi).unwrap());
        assert!(zesting_lift_exists(&inv, &Cochain::zero(&c2, &module, 2)).unwrap());
    }

    #[test]
    fn fully_faithful_examples() {
        let c2 = g("C2");
        let a = CoefficientModule::cyclic(2);
        let nontrivial = Cochain::from_fn(&c2, &a, 2, |x| usize::from(x == [1, 1])).unwrap();
        let r = fully_faithful_obstruction(&nontrivial).unwrap();
        assert_eq!((r.vanishes, r.splitting_count), (false, 0));
        let r = fully_faithful_obstruction(&Cochain::zero(&c2, &a, 2)).unwrap();
        assert_eq!((r.vanishes, r.splitting_count), (true, 2));
        let r = fully_faithful_obstruction(&Cochain::zero(&c2, &CoefficientModule::cyclic(1), 2)).unwrap();
        assert_eq!((r.vanishes, r.splitting_count), (true, 1));
    }
}
