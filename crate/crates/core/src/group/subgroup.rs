use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// Subgroup enumeration refuses groups larger than this unless overridden.
pub const DEFAULT_SUBGROUP_BOUND: usize = 64;

/// A subgroup stored as its sorted element ids. Ordered by `(order, ids)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    fn from_sorted(elements: Vec<usize>) -> Self {
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Position of `x` in the sorted element list.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(
            self.elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

/// `G/N` on minimal-id coset representatives.
///
/// Quotient element `i` is the coset of `section[i]`, and representatives
/// increase with `i`, so the identity coset is `0`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    pub section: Vec<usize>,
}

impl FiniteGroup {
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(vec![0])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.elements().collect())
    }

    /// Smallest subgroup containing `generators`.
    pub fn generate(&self, generators: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0];
        let mut cursor = 0;
        while cursor < list.len() {
            let x = list[cursor];
            for &g in generators {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            cursor += 1;
        }
        list.sort_unstable();
        Subgroup::from_sorted(list)
    }

    /// Checks that `elements` is closed and returns it as a subgroup.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup> {
        for &x in elements {
            self.check_element(x)?;
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        let sorted: Vec<usize> = set.into_iter().collect();
        let s = Subgroup::from_sorted(sorted);
        if !s.contains(0) {
            return Err(Error::NotASubgroup(elements.to_vec()));
        }
        for &a in s.elements() {
            if !s.contains(self.inv(a)) {
                return Err(Error::NotASubgroup(elements.to_vec()));
            }
            for &b in s.elements() {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup(elements.to_vec()));
                }
            }
        }
        Ok(s)
    }

    pub fn centralizer(&self, a: usize) -> Result<Subgroup> {
        self.check_element(a)?;
        Ok(Subgroup::from_sorted(
            self.elements().filter(|&g| self.commutes(g, a)).collect(),
        ))
    }

    pub fn center(&self) -> Subgroup {
        Subgroup::from_sorted(
            self.elements()
                .filter(|&z| self.elements().all(|g| self.commutes(z, g)))
                .collect(),
        )
    }

    /// Conjugacy classes ordered by their minimal-id representatives.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for a in self.elements() {
            if assigned[a] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.conj(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                assigned[x] = true;
            }
            classes.push(ConjugacyClass {
                representative: a,
                elements: class,
            });
        }
        classes
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        s.elements()
            .iter()
            .all(|&h| self.elements().all(|g| s.contains(self.conj(g, h))))
    }

    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let set: BTreeSet<Subgroup> = self.elements().map(|a| self.generate(&[a])).collect();
        set.into_iter().collect()
    }

    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    /// Every subgroup, sorted by `(order, element ids)`.
    ///
    /// Seeds with the cyclic subgroups and closes under joins with them; each
    /// subgroup is reached as an iterated join of cyclic subgroups.
    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<Vec<Subgroup>> {
        if self.order() > bound {
            return Err(Error::GroupTooLarge {
                order: self.order(),
                bound,
            });
        }
        let cyclic = self.cyclic_subgroups();
        let mut found: BTreeSet<Subgroup> = cyclic.iter().cloned().collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                if c.is_subset_of(&h) {
                    continue;
                }
                let mut gens = h.elements().to_vec();
                gens.extend_from_slice(c.elements());
                let join = self.generate(&gens);
                if !found.contains(&join) {
                    found.insert(join.clone());
                    frontier.push(join);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups()?
            .into_iter()
            .filter(|s| self.is_normal(s))
            .collect())
    }

    /// True when every element of `a` commutes with every element of `b`.
    pub fn elementwise_commute(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.elements()
            .iter()
            .all(|&x| b.elements().iter().all(|&y| self.commutes(x, y)))
    }

    /// Ordered pairs `(L, M)` of normal subgroups with `[L, M] = 1`, in the
    /// lexicographic order of their positions in [`Self::normal_subgroups`].
    pub fn commuting_normal_pairs(&self) -> Result<Vec<(Subgroup, Subgroup)>> {
        let normals = self.normal_subgroups()?;
        let mut pairs = Vec::new();
        for l in &normals {
            for m in &normals {
                if self.elementwise_commute(l, m) {
                    pairs.push((l.clone(), m.clone()));
                }
            }
        }
        Ok(pairs)
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal(n.elements().to_vec()));
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut section = Vec::new();
        for g in self.elements() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = section.len();
            section.push(g);
            for &x in n.elements() {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let q = section.len();
        let mut table = vec![0; q * q];
        for i in 0..q {
            for j in 0..q {
                table[i * q + j] = coset_of[self.mul(section[i], section[j])];
            }
        }
        let mut group = FiniteGroup::from_flat(q, table)?;
        if let Some(name) = self.name() {
            group = group.with_name(format!("{name}/N{}", n.order()));
        }
        let projection = GroupHom::new(self.clone(), group.clone(), coset_of)?;
        Ok(Quotient {
            group,
            projection,
            section,
        })
    }

    /// The subgroup as a group in its own right, with ids given by position in
    /// the sorted element list (so the identity stays `0`).
    pub fn subgroup_as_group(&self, s: &Subgroup) -> FiniteGroup {
        let k = s.order();
        let mut table = vec![0; k * k];
        for (i, &a) in s.elements().iter().enumerate() {
            for (j, &b) in s.elements().iter().enumerate() {
                table[i * k + j] = s.index_of(self.mul(a, b)).expect("subgroup is closed");
            }
        }
        let labels = s.elements().iter().map(|&x| self.label(x)).collect();
        FiniteGroup::from_flat(k, table)
            .expect("closed subgroup table is a group")
            .with_labels(labels)
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.generate(&gens)
    }

    pub fn abelianization(&self) -> Quotient {
        self.quotient(&self.commutator_subgroup())
            .expect("commutator subgroup is normal")
    }
}
