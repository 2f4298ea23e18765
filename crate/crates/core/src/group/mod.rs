//! Finite groups given by validated multiplication tables.
//!
//! Element `0` is always the identity. Everything downstream (subgroups,
//! quotients, duals, cohomology) is computed by brute force over the table,
//! which keeps every answer exact at the orders this crate targets.

mod abelian;
mod builtin;
mod hom;
mod subgroup;

pub use abelian::{annihilator, dual_group, AbelianBasis, DualGroup};
pub(crate) use abelian::increment as abelian_increment;
pub use builtin::{build_group, GroupSpec};
pub use hom::{count_homomorphisms, find_isomorphism, homomorphisms, GroupHom};
pub use subgroup::{ConjugacyClass, Quotient, Subgroup, DEFAULT_SUBGROUP_BOUND};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates `rows` as a group multiplication table with identity `0`.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {} instead of {order}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(order, table)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        for i in 0..order {
            if table[i] != i || table[i * order] != i {
                return Err(Error::NotAGroup(format!(
                    "element 0 is not a two-sided identity (row/column {i})"
                )));
            }
        }
        // Latin square: each row and column is a permutation.
        let mut seen = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                let x = table[i * order + j];
                if seen[x] == i {
                    return Err(Error::NotAGroup(format!("row {i} repeats {x}")));
                }
                seen[x] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..order {
            for i in 0..order {
                let x = table[i * order + j];
                if seen[x] == j {
                    return Err(Error::NotAGroup(format!("column {j} repeats {x}")));
                }
                seen[x] = j;
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    let bc = table[b * order + c];
                    if table[ab * order + c] != table[a * order + bc] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0; order];
        for a in 0..order {
            inverses[a] = (0..order)
                .find(|&b| table[a * order + b] == 0)
                .expect("latin square row contains the identity");
        }
        Ok(FiniteGroup {
            name: None,
            order,
            table,
            inverses,
            labels: None,
        })
    }

    /// Closes a set of permutations of `0..degree` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order starting from the
    /// identity; the product `a * b` applies `a` first, then `b`.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for g in generators {
            let mut hit = vec![false; degree];
            if g.len() != degree {
                return Err(Error::Parse(format!("permutation {g:?} has wrong degree")));
            }
            for &x in g {
                if x >= degree || hit[x] {
                    return Err(Error::Parse(format!("{g:?} is not a permutation")));
                }
                hit[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in generators {
                let next = compose(&elements[cursor], g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }
        Self::from_permutation_list(&elements, &index)
    }

    pub(crate) fn from_permutation_list(
        elements: &[Vec<usize>],
        index: &HashMap<Vec<usize>, usize>,
    ) -> Result<Self> {
        let order = elements.len();
        let mut table = vec![0; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let c = compose(a, b);
                table[i * order + j] = *index
                    .get(&c)
                    .ok_or_else(|| Error::NotAGroup("permutation set not closed".into()))?;
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(Self::from_flat(order, table)?.with_labels(labels))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order {
            self.labels = Some(labels);
        }
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("group of order {}", self.order))
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g * x * g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                id: a,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, crate::exact::lcm_usize)
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    /// Direct product with element id `i * |other| + j` for the pair `(i, j)`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut table = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                table[x * order + y] = self.mul(a, c) * m + other.mul(b, d);
            }
        }
        let inverses = (0..order)
            .map(|x| self.inv(x / m) * m + other.inv(x % m))
            .collect();
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}x{b}")),
            _ => None,
        };
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some(
                (0..order)
                    .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
                    .collect(),
            ),
        };
        FiniteGroup {
            name,
            order,
            table,
            inverses,
            labels,
        }
    }
}

/// `a` then `b`, as maps on `0..n`.
pub(crate) fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

pub(crate) fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative_table() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(rows), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn rejects_non_latin_rows() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table(rows), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn permutation_closure_is_breadth_first() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "()");
        assert_eq!(g.label(1), "(0 1 2)");
        assert_eq!(g.label(2), "(0 1)");
    }

    #[test]
    fn product_orders_multiply() {
        let c2 = build_group(&GroupSpec::builtin("C2")).unwrap();
        let c3 = build_group(&GroupSpec::builtin("C3")).unwrap();
        let p = c2.direct_product(&c3);
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        assert_eq!(p.exponent(), 6);
    }
}
