//! The twisted Drinfeld center `Z(Vec(G, omega))` at the level of counting:
//! the 2-cocycles `beta_a`, simple-object census and invertible objects.

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{differential, Cochain, CoefficientModule};
use crate::error::{Error, Result};
use crate::exact::UnityExponent;
use crate::group::{dual_group, FiniteGroup, GroupHom, Subgroup};

/// A group with a normalized `mu_N`-valued 3-cocycle.
#[derive(Debug, Clone)]
pub struct TwistedGroupData {
    group: FiniteGroup,
    omega: Cochain,
    /// `beta[(a*n + g)*n + h]`, exponents modulo `N`.
    beta: Vec<i64>,
}

impl TwistedGroupData {
    /// Validates that `omega` is a normalized 3-cocycle with `mu_N` values.
    pub fn new(group: &FiniteGroup, omega: Cochain) -> Result<Self> {
        if omega.degree() != 3 || omega.group() != group {
            return Err(Error::NotACocycle("omega must be a 3-cochain on the given group".into()));
        }
        if !omega.module().is_cyclic_unity() {
            return Err(Error::NotACocycle("omega must take values in mu_N".into()));
        }
        if !omega.is_normalized() {
            return Err(Error::NotACocycle("omega is not normalized".into()));
        }
        if !differential(&omega)?.is_zero() {
            return Err(Error::NotACocycle("d(omega) is not identically 1".into()));
        }
        Ok(Self::new_unchecked(group, omega))
    }

    /// Skips validation. Used to feed deliberately broken tables to the checks.
    pub fn new_unchecked(group: &FiniteGroup, omega: Cochain) -> Self {
        let n = group.order();
        let modulus = omega.module().order() as i64;
        let w = |a: usize, b: usize, c: usize| omega.values()[(a * n + b) * n + c] as i64;
        let mut beta = vec![0i64; n * n * n];
        for a in 0..n {
            for g in 0..n {
                let gi = group.inv(g);
                let a_g = group.mul(group.mul(gi, a), g);
                for h in 0..n {
                    let gh = group.mul(g, h);
                    let a_gh = group.conj(group.inv(gh), a);
                    let v = w(a, g, h) + w(g, h, a_gh) - w(g, a_g, h);
                    beta[(a * n + g) * n + h] = v.rem_euclid(modulus);
                }
            }
        }
        TwistedGroupData {
            group: group.clone(),
            omega,
            beta,
        }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::new_unchecked(group, crate::omega::trivial(group))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    /// `N` with `omega` valued in `mu_N`.
    pub fn modulus(&self) -> i64 {
        self.omega.module().order() as i64
    }

    pub fn is_trivial(&self) -> bool {
        self.omega.is_zero()
    }

    /// Exponent of `beta_a(g, h)` modulo [`Self::modulus`].
    #[inline]
    pub fn beta_exp(&self, a: usize, g: usize, h: usize) -> i64 {
        let n = self.group.order();
        self.beta[(a * n + g) * n + h]
    }

    pub fn beta(&self, a: usize, g: usize, h: usize) -> Result<UnityExponent> {
        for x in [a, g, h] {
            self.group.check_element(x)?;
        }
        Ok(UnityExponent::new(self.beta_exp(a, g, h), self.modulus()))
    }
}

/// `beta_a` on `C_G(a)`, as a cochain on the centralizer.
///
/// Centralizer element `i` is the `i`-th smallest id of `C_G(a)` in `G`.
#[derive(Debug, Clone)]
pub struct RestrictedBeta {
    pub centralizer: Subgroup,
    pub group: FiniteGroup,
    pub cocycle: Cochain,
}

pub fn beta_restricted_cocycle(data: &TwistedGroupData, a: usize) -> Result<RestrictedBeta> {
    let g = &data.group;
    let centralizer = g.centralizer(a)?;
    let cg = g.subgroup_as_group(&centralizer);
    let ids = centralizer.elements();
    let module = CoefficientModule::cyclic(data.modulus() as usize);
    let cocycle = Cochain::from_fn(&cg, &module, 2, |args| {
        data.beta_exp(a, ids[args[0]], ids[args[1]]) as usize
    })?;
    let d = differential(&cocycle)?;
    let m = cg.order();
    if let Some(idx) = d.values().iter().position(|&v| v != 0) {
        return Err(Error::BetaNotCocycle {
            a,
            g: ids[idx / (m * m)],
            h: ids[idx / m % m],
            k: ids[idx % m],
        });
    }
    Ok(RestrictedBeta {
        centralizer,
        group: cg,
        cocycle,
    })
}

/// Simple objects of the center lying over one conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleLabel {
    pub representative: usize,
    pub class_size: usize,
    pub centralizer_order: usize,
    /// Number of `beta_a`-regular classes of `C_G(a)`, i.e. of irreducible
    /// `beta_a`-projective representations.
    pub simple_count: usize,
    /// Sum of squared dimensions of those representations, `|C_G(a)|`.
    pub dimension_square_sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterCensus {
    pub labels: Vec<SimpleLabel>,
    pub simple_count: usize,
    /// `sum (class size * dim)^2` over all simples; equals `|G|^2`.
    pub fpdim_square_sum: usize,
}

pub fn simple_census(data: &TwistedGroupData) -> Result<CenterCensus> {
    let g = &data.group;
    let labels = g
        .conjugacy_classes()
        .par_iter()
        .map(|class| {
            let a = class.representative;
            let beta = beta_restricted_cocycle(data, a)?;
            let c = &beta.group;
            let b = |x: usize, y: usize| beta.cocycle.at(&[x, y]);
            let regular = |x: usize| {
                c.elements()
                    .filter(|&h| c.commutes(x, h))
                    .all(|h| b(x, h) == b(h, x))
            };
            let simple_count = c
                .conjugacy_classes()
                .iter()
                .filter(|k| regular(k.representative))
                .count();
            Ok(SimpleLabel {
                representative: a,
                class_size: class.elements.len(),
                centralizer_order: c.order(),
                simple_count,
                dimension_square_sum: c.order(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CenterCensus {
        simple_count: labels.iter().map(|l| l.simple_count).sum(),
        fpdim_square_sum: labels
            .iter()
            .map(|l| l.class_size * l.class_size * l.dimension_square_sum)
            .sum(),
        labels,
    })
}

/// `Inv(Z(Rep-enriched N)) = dual(N) x Z(N)` with the projection `R` onto `Z(N)`.
#[derive(Debug, Clone)]
pub struct InvertiblesOfCenter {
    /// Characters of `N`, i.e. the dual of its abelianization.
    pub characters: FiniteGroup,
    pub center: Subgroup,
    pub center_group: FiniteGroup,
    /// Ids `i * |Z(N)| + j` pair character `i` with the `j`-th central element.
    pub product: FiniteGroup,
    pub projection: GroupHom,
}

pub fn invertibles_of_center(n: &FiniteGroup) -> Result<InvertiblesOfCenter> {
    let ab = n.abelianization();
    let characters = dual_group(&ab.group)?.group;
    let center = n.center();
    let center_group = n.subgroup_as_group(&center);
    let product = characters.direct_product(&center_group);
    let z = center_group.order();
    let projection = GroupHom::new(
        product.clone(),
        center_group.clone(),
        product.elements().map(|x| x % z).collect(),
    )?;
    Ok(InvertiblesOfCenter {
        characters,
        center,
        center_group,
        product,
        projection,
    })
}
