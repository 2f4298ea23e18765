//! Cohomology of finite groups with finite abelian coefficients.
//!
//! Cochains are dense tables over `G^n` holding element ids of the coefficient
//! group. The differential is the bar differential with the action on the
//! first slot:
//!
//! ```text
//! (dc)(g1..g_{n+1}) = g1.c(g2..g_{n+1})
//!                   + sum_i (-1)^i c(g1..g_i g_{i+1}..g_{n+1})
//!                   + (-1)^{n+1} c(g1..g_n)
//! ```

mod json;
mod linear;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::UnityExponent;
use crate::group::{count_homomorphisms, AbelianBasis, FiniteGroup, GroupHom};

pub use json::CocycleFile;
pub use linear::{cohomology_group, cohomology_group_with_budget, CohomologyGroup, DEFAULT_BUDGET};

/// Highest cochain degree the differential accepts.
pub const MAX_DEGREE: usize = 3;

/// A finite abelian group `A`, written additively, with an optional left
/// action of some group `G` by automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientModule {
    group: FiniteGroup,
    basis: AbelianBasis,
    /// `action[g][a]` is `g.a`; `None` means trivial.
    action: Option<Vec<Vec<usize>>>,
}

impl CoefficientModule {
    /// `mu_N`, realized as `Z/N` with trivial action. Element ids are exponents.
    pub fn cyclic(n: usize) -> Self {
        let group = cyclic_group(n.max(1));
        Self::from_group(group).expect("cyclic groups are abelian")
    }

    /// `Z/d_1 x ... x Z/d_k` with trivial action.
    pub fn from_moduli(moduli: &[usize]) -> Self {
        let group = moduli
            .iter()
            .map(|&d| cyclic_group(d.max(1)))
            .reduce(|a, b| a.direct_product(&b))
            .unwrap_or_else(|| cyclic_group(1));
        Self::from_group(group).expect("products of cyclic groups are abelian")
    }

    pub fn from_group(group: FiniteGroup) -> Result<Self> {
        let basis = AbelianBasis::of(&group)?;
        Ok(CoefficientModule {
            group,
            basis,
            action: None,
        })
    }

    /// Attaches the action `g.a = action[g][a]` of `acting`.
    ///
    /// Every row must be an automorphism and `g -> action[g]` a homomorphism.
    pub fn with_action(mut self, acting: &FiniteGroup, action: Vec<Vec<usize>>) -> Result<Self> {
        let a = &self.group;
        if action.len() != acting.order() {
            return Err(Error::InvalidModule(format!(
                "{} action rows for an acting group of order {}",
                action.len(),
                acting.order()
            )));
        }
        for (g, row) in action.iter().enumerate() {
            if row.len() != a.order() {
                return Err(Error::InvalidModule(format!("action row {g} has length {}", row.len())));
            }
            let mut seen = vec![false; a.order()];
            for &y in row {
                if y >= a.order() || std::mem::replace(&mut seen[y], true) {
                    return Err(Error::InvalidModule(format!("action of {g} is not a permutation")));
                }
            }
            for x in a.elements() {
                for y in a.elements() {
                    if row[a.mul(x, y)] != a.mul(row[x], row[y]) {
                        return Err(Error::InvalidModule(format!("action of {g} is not additive")));
                    }
                }
            }
        }
        for g in acting.elements() {
            for h in acting.elements() {
                let gh = acting.mul(g, h);
                if a.elements().any(|x| action[gh][x] != action[g][action[h][x]]) {
                    return Err(Error::InvalidModule(format!(
                        "action is not a homomorphism at ({g}, {h})"
                    )));
                }
            }
        }
        let trivial = action.iter().all(|row| row.iter().enumerate().all(|(x, &y)| x == y));
        self.action = (!trivial).then_some(action);
        Ok(self)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn basis(&self) -> &AbelianBasis {
        &self.basis
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn exponent(&self) -> usize {
        self.basis.exponent().max(1)
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.is_none()
    }

    pub fn action(&self) -> Option<&[Vec<usize>]> {
        self.action.as_deref()
    }

    /// True for `Z/N` with trivial action, where ids are exponents.
    pub fn is_cyclic_unity(&self) -> bool {
        self.action.is_none()
            && (0..self.order()).all(|x| self.group.mul(x, 1 % self.order()) == (x + 1) % self.order())
    }

    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        match &self.action {
            Some(t) => t[g][a],
            None => a,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, self.group.inv(b))
    }

    fn check_acting(&self, g: &FiniteGroup) -> Result<()> {
        match &self.action {
            Some(t) if t.len() != g.order() => Err(Error::InvalidModule(format!(
                "module is acted on by a group of order {}, not {}",
                t.len(),
                g.order()
            ))),
            _ => Ok(()),
        }
    }
}

fn cyclic_group(n: usize) -> FiniteGroup {
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    FiniteGroup::from_flat(n, table)
        .expect("cyclic table is a group")
        .with_name(format!("C{n}"))
}

/// A function `G^n -> A` stored densely; argument `(g1..gn)` lives at index
/// `sum g_k |G|^(n-k)` (first argument most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    group: FiniteGroup,
    module: CoefficientModule,
    values: Vec<usize>,
}

impl Cochain {
    pub fn zero(group: &FiniteGroup, module: &CoefficientModule, degree: usize) -> Self {
        Cochain {
            degree,
            group: group.clone(),
            module: module.clone(),
            values: vec![0; group.order().pow(degree as u32)],
        }
    }

    pub fn from_fn(
        group: &FiniteGroup,
        module: &CoefficientModule,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> usize,
    ) -> Result<Self> {
        module.check_acting(group)?;
        let mut c = Self::zero(group, module, degree);
        let mut args = vec![0; degree];
        for idx in 0..c.values.len() {
            c.decode_into(idx, &mut args);
            let v = f(&args);
            module.group.check_element(v)?;
            c.values[idx] = v;
        }
        Ok(c)
    }

    pub fn from_values(
        group: &FiniteGroup,
        module: &CoefficientModule,
        degree: usize,
        values: Vec<usize>,
    ) -> Result<Self> {
        module.check_acting(group)?;
        if values.len() != group.order().pow(degree as u32) {
            return Err(Error::Dimension(format!(
                "{} values for a degree-{degree} cochain on a group of order {}",
                values.len(),
                group.order()
            )));
        }
        for &v in &values {
            module.group.check_element(v)?;
        }
        Ok(Cochain {
            degree,
            group: group.clone(),
            module: module.clone(),
            values,
        })
    }

    /// Uniformly random cochain; normalized ones vanish on degenerate tuples.
    pub fn random<R: Rng + ?Sized>(
        group: &FiniteGroup,
        module: &CoefficientModule,
        degree: usize,
        normalized: bool,
        rng: &mut R,
    ) -> Result<Self> {
        let a = module.order();
        Self::from_fn(group, module, degree, |args| {
            if normalized && args.contains(&0) {
                0
            } else {
                rng.gen_range(0..a)
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn module(&self) -> &CoefficientModule {
        &self.module
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.degree);
        let n = self.group.order();
        args.iter().fold(0, |acc, &g| acc * n + g)
    }

    fn decode_into(&self, mut idx: usize, out: &mut [usize]) {
        let n = self.group.order();
        for slot in out.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
    }

    pub fn at(&self, args: &[usize]) -> usize {
        self.values[self.index(args)]
    }

    pub fn set(&mut self, args: &[usize], value: usize) {
        let i = self.index(args);
        self.values[i] = value;
    }

    /// Value as a root of unity; only meaningful for `Z/N` coefficients.
    pub fn unity(&self, args: &[usize]) -> UnityExponent {
        UnityExponent::new(self.at(args) as i64, self.module.order() as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_normalized(&self) -> bool {
        let mut args = vec![0; self.degree];
        (0..self.values.len()).all(|idx| {
            self.decode_into(idx, &mut args);
            self.values[idx] == 0 || !args.contains(&0)
        })
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (x, &y) in out.values.iter_mut().zip(&other.values) {
            *x = self.module.add(*x, y);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (x, &y) in out.values.iter_mut().zip(&other.values) {
            *x = self.module.sub(*x, y);
        }
        Ok(out)
    }

    /// `k` times the cochain.
    pub fn scale(&self, k: usize) -> Cochain {
        let mut out = self.clone();
        let a = self.module.group();
        for x in out.values.iter_mut() {
            *x = a.pow(*x, k % a.order().max(1));
        }
        out
    }

    fn check_same(&self, other: &Cochain) -> Result<()> {
        if self.degree != other.degree || self.group != other.group || self.module != other.module {
            return Err(Error::Dimension("cochains live in different groups".into()));
        }
        Ok(())
    }
}

/// The bar differential `C^n -> C^{n+1}`.
pub fn differential(c: &Cochain) -> Result<Cochain> {
    let n = c.degree;
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooHigh(n));
    }
    let g = &c.group;
    let m = &c.module;
    let mut out = Cochain::zero(g, m, n + 1);
    let mut args = vec![0; n + 1];
    let mut sub = vec![0; n];
    for idx in 0..out.values.len() {
        out.decode_into(idx, &mut args);
        sub.copy_from_slice(&args[1..]);
        let mut acc = m.act(args[0], c.at(&sub));
        for i in 0..n {
            sub[..i].copy_from_slice(&args[..i]);
            sub[i] = g.mul(args[i], args[i + 1]);
            sub[i + 1..].copy_from_slice(&args[i + 2..]);
            let v = c.at(&sub);
            acc = if i % 2 == 0 { m.sub(acc, v) } else { m.add(acc, v) };
        }
        let last = c.at(&args[..n]);
        acc = if n % 2 == 0 { m.sub(acc, last) } else { m.add(acc, last) };
        out.values[idx] = acc;
    }
    Ok(out)
}

pub fn is_cocycle(c: &Cochain) -> bool {
    match differential(c) {
        Ok(d) => d.is_zero(),
        Err(_) => false,
    }
}

/// A cochain `x` of degree `n-1` with `d x = c`, if one exists.
///
/// The witness is normalized whenever `c` is.
pub fn is_coboundary(c: &Cochain) -> Option<Cochain> {
    linear::coboundary_witness(c)
}

/// Whether a `mu_N`-valued cocycle is trivial once its values are read in `C^x`.
///
/// The kernel of `H^n(G, mu_N) -> H^n(G, C^x)` dies in `H^n(G, mu_{N|G|})`,
/// since `|G|` kills `H^{n-1}(G, C^x)`; so it suffices to test there.
pub fn is_unity_coboundary(c: &Cochain) -> Result<bool> {
    if !c.module.is_cyclic_unity() {
        return Err(Error::InvalidModule("expected mu_N coefficients".into()));
    }
    if !is_cocycle(c) {
        return Err(Error::NotACocycle(format!("degree-{} cochain", c.degree)));
    }
    let n = c.module.order();
    let k = c.group.order();
    let target = CoefficientModule::cyclic(n * k);
    let lift = GroupHom::new(
        c.module.group().clone(),
        target.group().clone(),
        (0..n).map(|x| x * k).collect(),
    )?;
    Ok(is_coboundary(&pushforward(c, &lift, &target)?).is_some())
}

/// Applies `f: A -> B` entrywise. `f` must intertwine the actions.
pub fn pushforward(c: &Cochain, f: &GroupHom, target: &CoefficientModule) -> Result<Cochain> {
    if f.source() != c.module.group() || f.target() != target.group() {
        return Err(Error::NotAHomomorphism(
            "map does not go from the cochain's coefficients to the target module".into(),
        ));
    }
    target.check_acting(&c.group)?;
    for g in c.group.elements() {
        for a in c.module.group().elements() {
            if f.apply(c.module.act(g, a)) != target.act(g, f.apply(a)) {
                return Err(Error::NotAHomomorphism(format!(
                    "map is not equivariant at group element {g}, module element {a}"
                )));
            }
        }
    }
    Ok(Cochain {
        degree: c.degree,
        group: c.group.clone(),
        module: target.clone(),
        values: c.values.iter().map(|&v| f.apply(v)).collect(),
    })
}

/// Number of homomorphic sections of the central extension `A x_omega G -> G`.
pub fn count_splittings(omega: &Cochain) -> Result<u128> {
    if !omega.module.is_trivial_action() {
        return Err(Error::NonTrivialAction);
    }
    if omega.degree != 2 || !is_cocycle(omega) {
        return Err(Error::NotACocycle("splitting counts need a 2-cocycle".into()));
    }
    if is_coboundary(omega).is_none() {
        return Ok(0);
    }
    Ok(count_homomorphisms(&omega.group, omega.module.group()) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(name: &str) -> FiniteGroup {
        build_group(&GroupSpec::builtin(name)).unwrap()
    }

    #[test]
    fn degree_one_formula_on_c2() {
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(4);
        let c = Cochain::from_values(&c2, &m, 1, vec![0, 1]).unwrap();
        let d = differential(&c).unwrap();
        assert_eq!(d.at(&[1, 1]), 2);
        assert_eq!(differential(&Cochain::zero(&c2, &m, 2)).unwrap(), Cochain::zero(&c2, &m, 3));
    }

    #[test]
    fn d_squared_vanishes_on_s3() {
        let s3 = g("S3");
        let m = CoefficientModule::cyclic(6);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let c = Cochain::random(&s3, &m, 2, false, &mut rng).unwrap();
            assert!(differential(&differential(&c).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn sign_action_d_squared() {
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(3)
            .with_action(&c2, vec![vec![0, 1, 2], vec![0, 2, 1]])
            .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for deg in 0..=2 {
            let c = Cochain::random(&c2, &m, deg, false, &mut rng).unwrap();
            assert!(differential(&differential(&c).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn rejects_non_automorphism_action() {
        let c2 = g("C2");
        let bad = CoefficientModule::cyclic(4).with_action(&c2, vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]]);
        assert!(bad.is_err());
    }

    #[test]
    fn nontrivial_omega_on_c2() {
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(2);
        let omega = Cochain::from_fn(&c2, &m, 3, |a| usize::from(a == [1, 1, 1])).unwrap();
        assert!(is_cocycle(&omega));
        assert!(is_coboundary(&omega).is_none());
        let broken = Cochain::from_fn(&c2, &m, 3, |a| usize::from(a == [1, 1, 0])).unwrap();
        assert!(!is_cocycle(&broken));
    }

    #[test]
    fn coboundaries_have_witnesses() {
        let s3 = g("S3");
        let m = CoefficientModule::cyclic(4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = Cochain::random(&s3, &m, 1, true, &mut rng).unwrap();
        let dx = differential(&x).unwrap();
        let w = is_coboundary(&dx).unwrap();
        assert_eq!(differential(&w).unwrap(), dx);
    }

    #[test]
    fn splittings() {
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(2);
        let nontrivial = Cochain::from_fn(&c2, &m, 2, |a| usize::from(a == [1, 1])).unwrap();
        assert_eq!(count_splittings(&nontrivial).unwrap(), 0);
        assert_eq!(count_splittings(&Cochain::zero(&c2, &m, 2)).unwrap(), 2);
        let one = CoefficientModule::cyclic(1);
        assert_eq!(count_splittings(&Cochain::zero(&g("S3"), &one, 2)).unwrap(), 1);
    }

    #[test]
    fn pushforward_along_zero_and_identity() {
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(2);
        let c = Cochain::from_fn(&c2, &m, 2, |a| usize::from(a == [1, 1])).unwrap();
        let id = GroupHom::identity(m.group());
        assert_eq!(pushforward(&c, &id, &m).unwrap(), c);
        let zero = GroupHom::new(m.group().clone(), m.group().clone(), vec![0, 0]).unwrap();
        assert!(pushforward(&c, &zero, &m).unwrap().is_zero());
    }
}
