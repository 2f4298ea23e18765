//! Bases, duals and annihilators of finite abelian groups.

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::exact::lcm_usize;

/// An internal direct-sum decomposition `A = <a_1> x ... x <a_r>`.
///
/// `coords[x][i]` is the exponent of `a_i` in `x`; trivial factors are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianBasis {
    pub generators: Vec<usize>,
    pub orders: Vec<usize>,
    coords: Vec<Vec<usize>>,
}

impl AbelianBasis {
    /// Finds a basis by backtracking, trying elements of larger order (then
    /// smaller id) first. For cyclic groups this picks the smallest generator.
    pub fn of(group: &FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian(group.display_name()));
        }
        let mut candidates: Vec<usize> = group.elements().skip(1).collect();
        candidates.sort_by_key(|&a| (std::cmp::Reverse(group.element_order(a)), a));
        let mut chosen = Vec::new();
        let ok = search(group, &candidates, &mut chosen, 1);
        debug_assert!(ok, "finite abelian groups always have a basis");
        let orders: Vec<usize> = chosen.iter().map(|&a| group.element_order(a)).collect();
        let mut coords = vec![Vec::new(); group.order()];
        let mut exps = vec![0usize; chosen.len()];
        loop {
            let x = chosen
                .iter()
                .zip(&exps)
                .fold(0, |acc, (&a, &e)| group.mul(acc, group.pow(a, e)));
            coords[x] = exps.clone();
            if !increment(&mut exps, &orders) {
                break;
            }
        }
        Ok(AbelianBasis {
            generators: chosen,
            orders,
            coords,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn coords(&self, x: usize) -> &[usize] {
        &self.coords[x]
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().copied().fold(1, lcm_usize)
    }

    /// The element with the given coordinates (reduced modulo the orders).
    pub fn element(&self, group: &FiniteGroup, coords: &[i64]) -> usize {
        self.generators
            .iter()
            .zip(coords)
            .zip(&self.orders)
            .fold(0, |acc, ((&a, &c), &o)| {
                group.mul(acc, group.pow(a, c.rem_euclid(o as i64) as usize))
            })
    }
}

fn search(group: &FiniteGroup, candidates: &[usize], chosen: &mut Vec<usize>, size: usize) -> bool {
    if size == group.order() {
        return true;
    }
    let span = group.generate(chosen);
    for &c in candidates {
        if span.contains(c) {
            continue;
        }
        let k = group.element_order(c);
        chosen.push(c);
        // independent iff the span grows by the full order of c
        if group.generate(chosen).order() == size * k && search(group, candidates, chosen, size * k) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub(crate) fn increment(digits: &mut [usize], radix: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radix) {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// The character group of an abelian group together with the exact pairing.
///
/// Character ids follow the mixed-radix order of their coordinates against
/// [`AbelianBasis::of`] of the original group; `pairing[chi][a]` is the
/// exponent `e` with `chi(a) = exp(2 pi i e / modulus)`.
#[derive(Debug, Clone)]
pub struct DualGroup {
    pub group: FiniteGroup,
    pub pairing: Vec<Vec<i64>>,
    pub modulus: i64,
    pub basis: AbelianBasis,
}

impl DualGroup {
    pub fn value(&self, chi: usize, a: usize) -> i64 {
        self.pairing[chi][a]
    }
}

pub fn dual_group(a: &FiniteGroup) -> Result<DualGroup> {
    let basis = AbelianBasis::of(a)?;
    let modulus = basis.exponent() as i64;
    let order = a.order();
    let radix = &basis.orders;
    let decode = |mut id: usize| -> Vec<usize> {
        radix
            .iter()
            .map(|&r| {
                let d = id % r;
                id /= r;
                d
            })
            .collect()
    };
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(radix)
            .rev()
            .fold(0, |acc, (&d, &r)| acc * r + d)
    };
    let mut table = vec![0; order * order];
    for x in 0..order {
        let dx = decode(x);
        for y in 0..order {
            let dy = decode(y);
            let sum: Vec<usize> = dx
                .iter()
                .zip(&dy)
                .zip(radix)
                .map(|((&p, &q), &r)| (p + q) % r)
                .collect();
            table[x * order + y] = encode(&sum);
        }
    }
    let mut group = FiniteGroup::from_flat(order, table)?;
    if let Some(name) = a.name() {
        group = group.with_name(format!("dual({name})"));
    }
    let pairing = (0..order)
        .map(|chi| {
            let c = decode(chi);
            (0..order)
                .map(|x| {
                    let ax = basis.coords(x);
                    c.iter()
                        .zip(ax)
                        .zip(radix)
                        .map(|((&ci, &xi), &r)| (ci * xi) as i64 * (modulus / r as i64))
                        .sum::<i64>()
                        .rem_euclid(modulus)
                })
                .collect()
        })
        .collect();
    Ok(DualGroup {
        group,
        pairing,
        modulus,
        basis,
    })
}

/// `H^perp`: the characters that are trivial on `h`.
pub fn annihilator(dual: &DualGroup, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = dual
        .group
        .elements()
        .filter(|&chi| h.elements().iter().all(|&x| dual.value(chi, x) == 0))
        .collect();
    dual.group
        .subgroup(&members)
        .expect("annihilator is a subgroup")
}
