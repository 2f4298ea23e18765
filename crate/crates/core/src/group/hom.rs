use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A homomorphism stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "{} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        for &y in &images {
            target.check_element(y)?;
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "f({a}*{b}) != f({a})*f({b})"
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: group.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn kernel(&self) -> Subgroup {
        self.source.generate(
            &self
                .source
                .elements()
                .filter(|&x| self.images[x] == 0)
                .collect::<Vec<_>>(),
        )
    }

    pub fn image(&self) -> Subgroup {
        self.target.generate(&self.images)
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    /// Minimal-id preimage of each target element; `section[0] == 0`.
    pub fn minimal_section(&self) -> Result<Vec<usize>> {
        let mut section = vec![usize::MAX; self.target.order()];
        for x in self.source.elements().rev() {
            section[self.images[x]] = x;
        }
        if section.contains(&usize::MAX) {
            return Err(Error::NotSurjective {
                image: self.image().order(),
                target: self.target.order(),
            });
        }
        Ok(section)
    }
}

/// Generating set chosen greedily, preferring elements of larger order.
fn generating_set(group: &FiniteGroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = group.elements().skip(1).collect();
    candidates.sort_by_key(|&a| (std::cmp::Reverse(group.element_order(a)), a));
    let mut gens = Vec::new();
    let mut span = group.trivial_subgroup();
    for a in candidates {
        if span.order() == group.order() {
            break;
        }
        if !span.contains(a) {
            gens.push(a);
            span = group.generate(&gens);
        }
    }
    gens
}

/// Extends generator images to a full map, or `None` if inconsistent.
fn extend(source: &FiniteGroup, target: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; source.order()];
    map[0] = 0;
    let mut queue = vec![0];
    let mut cursor = 0;
    while cursor < queue.len() {
        let x = queue[cursor];
        cursor += 1;
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = source.mul(x, g);
            let fy = target.mul(map[x], h);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn for_each_hom(source: &FiniteGroup, target: &FiniteGroup, mut visit: impl FnMut(Vec<usize>)) {
    let gens = generating_set(source);
    // An image must have order dividing the generator's order.
    let options: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = source.element_order(g);
            target
                .elements()
                .filter(|&h| k % target.element_order(h) == 0)
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        if let Some(map) = extend(source, target, &gens, &imgs) {
            visit(map);
        }
        let mut pos = 0;
        loop {
            if pos == gens.len() {
                return;
            }
            choice[pos] += 1;
            if choice[pos] < options[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// All homomorphisms `source -> target`, found by brute force over generator images.
pub fn homomorphisms(source: &FiniteGroup, target: &FiniteGroup) -> Vec<GroupHom> {
    let mut out = Vec::new();
    for_each_hom(source, target, |images| {
        out.push(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    });
    out
}

pub fn count_homomorphisms(source: &FiniteGroup, target: &FiniteGroup) -> usize {
    let mut n = 0;
    for_each_hom(source, target, |_| n += 1);
    n
}

/// Brute-force isomorphism search.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let mut orders_a: Vec<usize> = a.elements().map(|x| a.element_order(x)).collect();
    let mut orders_b: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b || a.is_abelian() != b.is_abelian() {
        return None;
    }
    let mut found = None;
    for_each_hom(a, b, |images| {
        if found.is_none() {
            let mut hit = vec![false; b.order()];
            for &y in &images {
                hit[y] = true;
            }
            if hit.iter().all(|&h| h) {
                found = Some(GroupHom {
                    source: a.clone(),
                    target: b.clone(),
                    images,
                });
            }
        }
    });
    found
}
