//! Fusion subcategories `S(L, M, B)` of `Z(Vec(G, omega))`.
//!
//! `B: L x M -> mu_K` is stored as exponents modulo `K = exp(G) * N`, where
//! `omega` takes values in `mu_N`. Every `omega`-bicharacter has values there:
//! iterating axiom (1) gives `B(l, m)^ord(m)` in `mu_N`.

use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::center::TwistedGroupData;
use crate::error::{Error, Result};
use crate::exact::{solve_rows, Congruences, UnityExponent};
use crate::group::Subgroup;

/// Default cap on candidate tables examined by [`enumerate_subcats`].
pub const DEFAULT_CANDIDATE_BUDGET: u128 = 2_000_000;

/// Exponent table of a function `L x M -> mu_K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaBicharacter {
    l: Subgroup,
    m: Subgroup,
    modulus: i64,
    /// `table[i * |M| + j]` for the `i`-th element of `L` and `j`-th of `M`.
    table: Vec<i64>,
}

impl OmegaBicharacter {
    pub fn new(l: Subgroup, m: Subgroup, modulus: i64, table: Vec<i64>) -> Result<Self> {
        if table.len() != l.order() * m.order() {
            return Err(Error::Dimension(format!(
                "bicharacter table has {} entries for |L| = {}, |M| = {}",
                table.len(),
                l.order(),
                m.order()
            )));
        }
        let table = table.into_iter().map(|x| x.rem_euclid(modulus)).collect();
        Ok(OmegaBicharacter { l, m, modulus, table })
    }

    pub fn trivial(l: Subgroup, m: Subgroup, modulus: i64) -> Self {
        let table = vec![0; l.order() * m.order()];
        OmegaBicharacter { l, m, modulus, table }
    }

    /// Builds the table from a function of group element ids.
    pub fn from_fn(l: Subgroup, m: Subgroup, modulus: i64, f: impl Fn(usize, usize) -> i64) -> Self {
        let table = l
            .elements()
            .iter()
            .flat_map(|&x| m.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| f(x, y).rem_euclid(modulus))
            .collect();
        OmegaBicharacter { l, m, modulus, table }
    }

    pub fn l(&self) -> &Subgroup {
        &self.l
    }

    pub fn m(&self) -> &Subgroup {
        &self.m
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn table(&self) -> &[i64] {
        &self.table
    }

    /// Exponent of `B(l, m)` for group elements `l` in `L`, `m` in `M`.
    pub fn exp(&self, l: usize, m: usize) -> i64 {
        let i = self.l.index_of(l).expect("first argument lies in L");
        let j = self.m.index_of(m).expect("second argument lies in M");
        self.table[i * self.m.order() + j]
    }

    pub fn value(&self, l: usize, m: usize) -> UnityExponent {
        UnityExponent::new(self.exp(l, m), self.modulus)
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&x| x == 0)
    }
}

/// Which defining condition of a `G`-invariant `omega`-bicharacter failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    /// `L`, `M` normal and elementwise commuting; modulus compatible.
    Structure,
    /// `B(l, mn) = beta_l(m, n)^-1 B(l, m) B(l, n)`
    SecondSlot,
    /// `B(kl, m) = beta_m(k, l) B(k, m) B(l, m)`
    FirstSlot,
    /// `G`-invariance.
    Invariance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    /// The offending tuple of element ids, in the order the axiom names them.
    pub elements: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.axiom {
            Axiom::Structure => "L and M must be commuting normal subgroups",
            Axiom::SecondSlot => "multiplicativity in M fails at (l, m, n)",
            Axiom::FirstSlot => "multiplicativity in L fails at (k, l, m)",
            Axiom::Invariance => "G-invariance fails at (g, l, m)",
        };
        write!(f, "{what}: {:?}", self.elements)
    }
}

impl std::error::Error for Violation {}

/// Modulus for bicharacter values over the given data.
pub fn bicharacter_modulus(data: &TwistedGroupData) -> i64 {
    data.group().exponent() as i64 * data.modulus()
}

/// Exhaustive check of axioms (1), (2), (3); returns the first failure.
pub fn verify_bicharacter(data: &TwistedGroupData, b: &OmegaBicharacter) -> std::result::Result<(), Violation> {
    let g = data.group();
    let (l, m) = (&b.l, &b.m);
    let k = b.modulus;
    if !g.is_normal(l) || !g.is_normal(m) || !g.elementwise_commute(l, m) || k % data.modulus() != 0 {
        return Err(Violation {
            axiom: Axiom::Structure,
            elements: Vec::new(),
        });
    }
    let s = k / data.modulus();
    let beta = |a, x, y| data.beta_exp(a, x, y) * s;
    let eq = |x: i64, y: i64| (x - y).rem_euclid(k) == 0;
    for &x in l.elements() {
        for &p in m.elements() {
            for &q in m.elements() {
                let lhs = b.exp(x, g.mul(p, q));
                if !eq(lhs, -beta(x, p, q) + b.exp(x, p) + b.exp(x, q)) {
                    return Err(Violation {
                        axiom: Axiom::SecondSlot,
                        elements: vec![x, p, q],
                    });
                }
            }
        }
    }
    for &x in l.elements() {
        for &y in l.elements() {
            for &p in m.elements() {
                let lhs = b.exp(g.mul(x, y), p);
                if !eq(lhs, beta(p, x, y) + b.exp(x, p) + b.exp(y, p)) {
                    return Err(Violation {
                        axiom: Axiom::FirstSlot,
                        elements: vec![x, y, p],
                    });
                }
            }
        }
    }
    invariance_violation(data, b).map_or(Ok(()), Err)
}

fn invariance_violation(data: &TwistedGroupData, b: &OmegaBicharacter) -> Option<Violation> {
    let g = data.group();
    let k = b.modulus;
    let s = k / data.modulus();
    for x in g.elements() {
        let xi = g.inv(x);
        for &l in b.l.elements() {
            for &m in b.m.elements() {
                let lhs = b.exp(g.conj(xi, l), m);
                let rhs = s * (data.beta_exp(l, x, m) + data.beta_exp(l, g.mul(x, m), xi) - data.beta_exp(l, x, xi))
                    + b.exp(l, g.conj(x, m));
                if (lhs - rhs).rem_euclid(k) != 0 {
                    return Some(Violation {
                        axiom: Axiom::Invariance,
                        elements: vec![x, l, m],
                    });
                }
            }
        }
    }
    None
}

/// Every `G`-invariant `omega`-bicharacter on `L x M`, in lexicographic order
/// of exponent tables.
///
/// Axioms (1) and (2) are affine in the exponents and are solved as linear
/// congruences; (3) filters the resulting coset. `budget` caps its size.
pub fn invariant_bicharacters(
    data: &TwistedGroupData,
    l: &Subgroup,
    m: &Subgroup,
    budget: u128,
) -> Result<Vec<OmegaBicharacter>> {
    let g = data.group();
    let k = bicharacter_modulus(data);
    let s = k / data.modulus();
    let (nl, nm) = (l.order(), m.order());
    let var = |x: usize, y: usize| l.index_of(x).unwrap() * nm + m.index_of(y).unwrap();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |coefs: [(usize, i64); 3], b: i64| {
        let mut row = vec![0i64; nl * nm];
        for (v, c) in coefs {
            row[v] += c;
        }
        let b = b.rem_euclid(k);
        if row.iter().all(|&x| x.rem_euclid(k) == 0) && b == 0 {
            return;
        }
        if seen.insert((row.clone(), b)) {
            rows.push(row);
            rhs.push(b);
        }
    };
    for &x in l.elements() {
        for &p in m.elements() {
            for &q in m.elements() {
                let pq = g.mul(p, q);
                push([(var(x, pq), 1), (var(x, p), -1), (var(x, q), -1)], -s * data.beta_exp(x, p, q));
            }
        }
    }
    for &x in l.elements() {
        for &y in l.elements() {
            for &p in m.elements() {
                let xy = g.mul(x, y);
                push([(var(xy, p), 1), (var(x, p), -1), (var(y, p), -1)], s * data.beta_exp(p, x, y));
            }
        }
    }
    let solutions = if rows.is_empty() {
        crate::exact::SolutionSet {
            modulus: k,
            particular: vec![0; nl * nm],
            kernel: (0..nl * nm)
                .map(|v| {
                    let mut e = vec![0; nl * nm];
                    e[v] = 1;
                    (e, k)
                })
                .collect(),
        }
    } else {
        match solve_rows(rows, nl * nm, &rhs, k) {
            Congruences::Infeasible => return Ok(Vec::new()),
            Congruences::Solutions(sol) => sol,
        }
    };
    let count = solutions.count();
    if count > budget {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget,
        });
    }
    let mut out: Vec<OmegaBicharacter> = solutions
        .iter()
        .map(|table| OmegaBicharacter {
            l: l.clone(),
            m: m.clone(),
            modulus: k,
            table,
        })
        .filter(|b| invariance_violation(data, b).is_none())
        .collect();
    out.sort_by(|a, b| a.table.cmp(&b.table));
    Ok(out)
}

/// The classification datum `S(L, M, B)` together with its ambient category.
#[derive(Debug, Clone)]
pub struct SubcatData {
    parent: Arc<TwistedGroupData>,
    b: OmegaBicharacter,
}

impl PartialEq for SubcatData {
    fn eq(&self, other: &Self) -> bool {
        self.b == other.b
    }
}

impl Eq for SubcatData {}

impl SubcatData {
    /// Verifies all axioms before accepting `b`.
    pub fn new(parent: Arc<TwistedGroupData>, b: OmegaBicharacter) -> std::result::Result<Self, Violation> {
        verify_bicharacter(&parent, &b)?;
        Ok(SubcatData { parent, b })
    }

    pub(crate) fn new_verified(parent: Arc<TwistedGroupData>, b: OmegaBicharacter) -> Self {
        debug_assert!(verify_bicharacter(&parent, &b).is_ok());
        SubcatData { parent, b }
    }

    /// `S(L, M, 1)`. Fails when `L`, `M` do not commute or are not normal.
    pub fn with_trivial_b(parent: Arc<TwistedGroupData>, l: Subgroup, m: Subgroup) -> std::result::Result<Self, Violation> {
        let k = bicharacter_modulus(&parent);
        Self::new(parent, OmegaBicharacter::trivial(l, m, k))
    }

    pub fn parent(&self) -> &Arc<TwistedGroupData> {
        &self.parent
    }

    pub fn l(&self) -> &Subgroup {
        &self.b.l
    }

    pub fn m(&self) -> &Subgroup {
        &self.b.m
    }

    pub fn b(&self) -> &OmegaBicharacter {
        &self.b
    }

    pub fn same_parent(&self, other: &SubcatData) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
            || (self.parent.group() == other.parent.group() && self.parent.omega() == other.parent.omega())
    }

    fn sort_key(&self) -> (usize, usize, &[usize], &[usize], &[i64]) {
        (
            self.b.l.order(),
            self.b.m.order(),
            self.b.l.elements(),
            self.b.m.elements(),
            &self.b.table,
        )
    }

    pub fn to_record(&self) -> SubcatRecord {
        let mut table = IndexMap::new();
        for &x in self.b.l.elements() {
            for &y in self.b.m.elements() {
                table.insert(format!("{x},{y}"), self.b.exp(x, y));
            }
        }
        SubcatRecord {
            l: self.b.l.elements().to_vec(),
            m: self.b.m.elements().to_vec(),
            b: table,
            modulus: self.b.modulus,
            fpdim: fpdim(self),
        }
    }
}

/// JSON form: `{"L", "M", "B": {"l,m": exponent}, "modulus", "fpdim"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcatRecord {
    #[serde(rename = "L")]
    pub l: Vec<usize>,
    #[serde(rename = "M")]
    pub m: Vec<usize>,
    #[serde(rename = "B")]
    pub b: IndexMap<String, i64>,
    pub modulus: i64,
    pub fpdim: usize,
}

/// `|L| [G : M]`.
pub fn fpdim(s: &SubcatData) -> usize {
    s.b.l.order() * (s.parent.group().order() / s.b.m.order())
}

/// `S(L, M, B)' = S(M, L, B')` with `B'(m, l) = B(l, m)^-1`.
///
/// Fails if the swapped table violates an axiom.
pub fn centralizer_subcat(s: &SubcatData) -> std::result::Result<SubcatData, Violation> {
    let b = &s.b;
    let swapped = OmegaBicharacter::from_fn(b.m.clone(), b.l.clone(), b.modulus, |m, l| -b.exp(l, m));
    SubcatData::new(s.parent.clone(), swapped)
}

/// Whether `inner` is a subcategory of `outer`.
///
/// `S(L, M, B)` lies in `S(L', M', B')` iff `L <= L'`, `M' <= M` and the
/// tables agree on `L x M'`.
pub fn contains(outer: &SubcatData, inner: &SubcatData) -> Result<bool> {
    if !outer.same_parent(inner) {
        return Err(Error::ParentMismatch);
    }
    let (l, m) = (inner.l(), inner.m());
    let (l2, m2) = (outer.l(), outer.m());
    if !l.is_subset_of(l2) || !m2.is_subset_of(m) {
        return Ok(false);
    }
    let (bi, bo) = (&inner.b, &outer.b);
    Ok(l.elements().iter().all(|&x| {
        m2.elements().iter().all(|&y| {
            // both tables use the same modulus for the same parent
            bi.exp(x, y) == bo.exp(x, y)
        })
    }))
}

pub fn enumerate_subcats(data: &Arc<TwistedGroupData>) -> Result<Vec<SubcatData>> {
    enumerate_subcats_with_budget(data, DEFAULT_CANDIDATE_BUDGET)
}

/// All `S(L, M, B)`, sorted by `(|L|, |M|, L, M, B)`.
pub fn enumerate_subcats_with_budget(data: &Arc<TwistedGroupData>, budget: u128) -> Result<Vec<SubcatData>> {
    let pairs = data.group().commuting_normal_pairs()?;
    let per_pair: Vec<Vec<SubcatData>> = pairs
        .par_iter()
        .map(|(l, m)| {
            Ok(invariant_bicharacters(data, l, m, budget)?
                .into_iter()
                .map(|b| SubcatData::new_verified(data.clone(), b))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<SubcatData> = per_pair.into_iter().flatten().collect();
    all.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(all)
}
