//! Cocycles, coboundaries and `H^n` as lattices over `Z/N`, `N = exp(A)`.
//!
//! A cochain becomes a vector with one coordinate per (argument tuple, basis
//! factor `Z/d_i` of `A`). A congruence modulo `d_j` is multiplied by `N/d_j`
//! so that every system lives over the single ring `Z/N`.

use super::{differential, is_cocycle, Cochain, CoefficientModule, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::exact::{invariant_factors, kernel_mod, quotient_mod, solve_rows, Congruences};
use crate::group::FiniteGroup;

/// Default cap on the number of dense differential-matrix entries.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// `H^n(G, A)` as a direct sum of cyclic groups with representative cocycles.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    pub degree: usize,
    /// Orders of the cyclic summands, matching `representatives`.
    pub orders: Vec<i64>,
    pub invariant_factors: Vec<i64>,
    /// Normalized cocycles generating the summands.
    pub representatives: Vec<Cochain>,
}

impl CohomologyGroup {
    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&o| o as u128).product()
    }
}

struct Coords<'a> {
    group: &'a FiniteGroup,
    module: &'a CoefficientModule,
    /// Elements allowed as arguments: the non-identity ones when normalized.
    elems: Vec<usize>,
    /// Position of a group element in `elems`.
    pos: Vec<Option<usize>>,
    moduli: Vec<i64>,
    /// `action[g][j][i]`: coordinate `j` of `g` applied to basis generator `i`.
    action: Vec<Vec<Vec<i64>>>,
    exponent: i64,
}

impl<'a> Coords<'a> {
    fn new(group: &'a FiniteGroup, module: &'a CoefficientModule, normalized: bool) -> Self {
        let elems: Vec<usize> = group.elements().filter(|&g| !normalized || g != 0).collect();
        let mut pos = vec![None; group.order()];
        for (k, &g) in elems.iter().enumerate() {
            pos[g] = Some(k);
        }
        let basis = module.basis();
        let r = basis.rank();
        let action = group
            .elements()
            .map(|g| {
                (0..r)
                    .map(|j| {
                        (0..r)
                            .map(|i| basis.coords(module.act(g, basis.generators[i]))[j] as i64)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Coords {
            group,
            module,
            elems,
            pos,
            moduli: basis.orders.iter().map(|&d| d as i64).collect(),
            action,
            exponent: module.exponent() as i64,
        }
    }

    fn rank(&self) -> usize {
        self.moduli.len()
    }

    fn tuples(&self, n: usize) -> usize {
        self.elems.len().pow(n as u32)
    }

    fn dim(&self, n: usize) -> usize {
        self.tuples(n) * self.rank()
    }

    fn tuple(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let b = self.elems.len();
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = self.elems[idx % b];
            idx /= b;
        }
        out
    }

    /// Index of an argument tuple, or `None` if it leaves the allowed elements.
    fn tuple_index(&self, args: &[usize]) -> Option<usize> {
        let b = self.elems.len();
        args.iter()
            .try_fold(0, |acc, &g| self.pos[g].map(|p| acc * b + p))
    }

    fn modulus_of(&self, coord: usize) -> i64 {
        self.moduli[coord % self.rank()]
    }

    fn to_vector(&self, c: &Cochain) -> Vec<i64> {
        let r = self.rank();
        let basis = self.module.basis();
        let mut x = vec![0; self.dim(c.degree())];
        for t in 0..self.tuples(c.degree()) {
            let args = self.tuple(t, c.degree());
            let coords = basis.coords(c.at(&args));
            for i in 0..r {
                x[t * r + i] = coords[i] as i64;
            }
        }
        x
    }

    fn to_cochain(&self, x: &[i64], n: usize) -> Cochain {
        let r = self.rank();
        let basis = self.module.basis();
        let mut c = Cochain::zero(self.group, self.module, n);
        for t in 0..self.tuples(n) {
            let args = self.tuple(t, n);
            let v = basis.element(self.module.group(), &x[t * r..(t + 1) * r]);
            c.set(&args, v);
        }
        c
    }

    /// Matrix of `d: C^n -> C^{n+1}`, entries reduced modulo the row's factor.
    fn differential_matrix(&self, n: usize) -> Vec<Vec<i64>> {
        let r = self.rank();
        let cols = self.dim(n);
        let mut rows = vec![vec![0i64; cols]; self.dim(n + 1)];
        let mut sub = vec![0; n];
        for t in 0..self.tuples(n + 1) {
            let args = self.tuple(t, n + 1);
            let add = |sub: &[usize], j: usize, i: usize, coef: i64, rows: &mut Vec<Vec<i64>>| {
                if let Some(s) = self.tuple_index(sub) {
                    rows[t * r + j][s * r + i] += coef;
                }
            };
            for j in 0..r {
                for i in 0..r {
                    let a = self.action[args[0]][j][i];
                    if a != 0 {
                        add(&args[1..], j, i, a, &mut rows);
                    }
                }
                for k in 0..n {
                    sub[..k].copy_from_slice(&args[..k]);
                    sub[k] = self.group.mul(args[k], args[k + 1]);
                    sub[k + 1..].copy_from_slice(&args[k + 2..]);
                    let sign = if k % 2 == 0 { -1 } else { 1 };
                    add(&sub, j, j, sign, &mut rows);
                }
                let sign = if n % 2 == 0 { -1 } else { 1 };
                add(&args[..n], j, j, sign, &mut rows);
            }
        }
        for (row, out) in rows.iter_mut().enumerate() {
            let d = self.modulus_of(row);
            for x in out.iter_mut() {
                *x = x.rem_euclid(d);
            }
        }
        rows
    }

    /// Multiplies each row by `N / d_row` so congruences hold modulo `N`.
    fn scale_rows(&self, rows: &mut [Vec<i64>]) {
        for (i, row) in rows.iter_mut().enumerate() {
            let s = self.exponent / self.modulus_of(i);
            if s != 1 {
                for x in row.iter_mut() {
                    *x *= s;
                }
            }
        }
    }
}

pub fn cohomology_group(group: &FiniteGroup, n: usize, module: &CoefficientModule) -> Result<CohomologyGroup> {
    cohomology_group_with_budget(group, n, module, DEFAULT_BUDGET)
}

/// `H^n(G, A)` on the normalized subcomplex.
///
/// `budget` caps the dense entries of the differential matrices involved.
pub fn cohomology_group_with_budget(
    group: &FiniteGroup,
    n: usize,
    module: &CoefficientModule,
    budget: u128,
) -> Result<CohomologyGroup> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooHigh(n));
    }
    module.check_acting(group)?;
    let sys = Coords::new(group, module, true);
    let (m_prev, m_n, m_next) = (
        if n == 0 { 0 } else { sys.dim(n - 1) } as u128,
        sys.dim(n) as u128,
        sys.dim(n + 1) as u128,
    );
    let needed = m_next * m_n + m_n * m_prev;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let empty = CohomologyGroup {
        degree: n,
        orders: Vec::new(),
        invariant_factors: Vec::new(),
        representatives: Vec::new(),
    };
    if module.order() == 1 || sys.dim(n) == 0 {
        return Ok(empty);
    }
    let big_n = sys.exponent;
    let cols = sys.dim(n);
    let mut d_n = sys.differential_matrix(n);
    sys.scale_rows(&mut d_n);
    let (snf, _) = kernel_mod(d_n, cols, big_n);

    // Cocycles mod N: y = V^-1 x has y_t in (N/g_t) Z/N.
    let zgens: Vec<(usize, i64, i64)> = (0..cols)
        .filter_map(|t| {
            let order = snf.kernel_order(t);
            (order > 1).then_some((t, order, big_n / order))
        })
        .collect();
    if zgens.is_empty() {
        return Ok(empty);
    }
    let to_z = |x: &[i64]| -> Vec<i64> {
        zgens
            .iter()
            .map(|&(t, order, step)| {
                let y = snf.v_inv[t]
                    .iter()
                    .zip(x)
                    .fold(0i64, |acc, (&a, &b)| (acc + a * b.rem_euclid(big_n)) % big_n);
                debug_assert_eq!(y % step, 0, "vector is not a cocycle");
                (y / step).rem_euclid(order)
            })
            .collect()
    };

    let mut relations: Vec<Vec<i64>> = Vec::new();
    for c in 0..cols {
        let d = sys.modulus_of(c);
        if d != big_n {
            let mut x = vec![0; cols];
            x[c] = d;
            relations.push(to_z(&x));
        }
    }
    if n > 0 {
        let d_prev = sys.differential_matrix(n - 1);
        for k in 0..sys.dim(n - 1) {
            let col: Vec<i64> = d_prev.iter().map(|row| row[k]).collect();
            relations.push(to_z(&col));
        }
    }
    for (s, &(_, order, _)) in zgens.iter().enumerate() {
        let mut e = vec![0; zgens.len()];
        e[s] = order;
        relations.push(e);
    }

    let classes = quotient_mod(relations, zgens.len(), big_n);
    let mut orders = Vec::new();
    let mut representatives = Vec::new();
    for (order, w) in classes {
        let mut x = vec![0i64; cols];
        for (&ws, &(t, _, step)) in w.iter().zip(&zgens) {
            let coef = (ws.rem_euclid(big_n) * step) % big_n;
            if coef == 0 {
                continue;
            }
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = (*xi + coef * snf.v[i][t]) % big_n;
            }
        }
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = xi.rem_euclid(sys.modulus_of(i));
        }
        let rep = sys.to_cochain(&x, n);
        debug_assert!(is_cocycle(&rep));
        orders.push(order);
        representatives.push(rep);
    }
    Ok(CohomologyGroup {
        degree: n,
        invariant_factors: invariant_factors(&orders),
        orders,
        representatives,
    })
}

/// Solves `d x = c` by linear congruences; normalized `c` gets a normalized `x`.
pub(super) fn coboundary_witness(c: &Cochain) -> Option<Cochain> {
    let n = c.degree();
    if n == 0 {
        return None;
    }
    if n <= MAX_DEGREE && !is_cocycle(c) {
        return None;
    }
    let group = c.group();
    let module = c.module();
    if module.order() == 1 {
        return Some(Cochain::zero(group, module, n - 1));
    }
    let sys = Coords::new(group, module, c.is_normalized());
    let mut rows = sys.differential_matrix(n - 1);
    sys.scale_rows(&mut rows);
    let mut b = sys.to_vector(c);
    for (i, x) in b.iter_mut().enumerate() {
        *x *= sys.exponent / sys.modulus_of(i);
    }
    let cols = sys.dim(n - 1);
    let solution = match solve_rows(rows, cols, &b, sys.exponent) {
        Congruences::Infeasible => return None,
        Congruences::Solutions(s) => s,
    };
    let x: Vec<i64> = solution
        .particular
        .iter()
        .enumerate()
        .map(|(i, &v)| v.rem_euclid(sys.modulus_of(i)))
        .collect();
    let witness = sys.to_cochain(&x, n - 1);
    let check = differential(&witness).ok()?;
    assert_eq!(&check, c, "coboundary witness failed verification");
    Some(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn g(name: &str) -> FiniteGroup {
        build_group(&GroupSpec::builtin(name)).unwrap()
    }

    fn order(group: &str, n: usize, module: &CoefficientModule) -> u128 {
        cohomology_group(&g(group), n, module).unwrap().order()
    }

    #[test]
    fn cyclic_groups() {
        let m2 = CoefficientModule::cyclic(2);
        assert_eq!(order("C2", 1, &m2), 2);
        assert_eq!(order("C2", 2, &m2), 2);
        assert_eq!(order("C2", 3, &CoefficientModule::cyclic(4)), 2);
        assert_eq!(order("C4", 3, &CoefficientModule::cyclic(4)), 4);
        assert_eq!(order("C3", 2, &CoefficientModule::cyclic(3)), 3);
        assert_eq!(order("C3", 0, &CoefficientModule::cyclic(3)), 3);
    }

    #[test]
    fn klein_and_s3() {
        let m2 = CoefficientModule::cyclic(2);
        assert_eq!(order("C2xC2", 2, &m2), 8);
        assert_eq!(order("C2xC2", 1, &m2), 4);
        // H^3(S3, Z/6) = H^3(S3, C^x) = Z/6
        let h = cohomology_group(&g("S3"), 3, &CoefficientModule::cyclic(6)).unwrap();
        assert_eq!(h.invariant_factors, vec![6]);
        for r in &h.representatives {
            assert!(is_cocycle(r) && r.is_normalized());
        }
    }

    #[test]
    fn sign_action() {
        // C2 acting on Z/3 by inversion: H^1 = 0, H^2 = 0.
        let c2 = g("C2");
        let m = CoefficientModule::cyclic(3)
            .with_action(&c2, vec![vec![0, 1, 2], vec![0, 2, 1]])
            .unwrap();
        assert_eq!(cohomology_group(&c2, 1, &m).unwrap().order(), 1);
        assert_eq!(cohomology_group(&c2, 2, &m).unwrap().order(), 1);
        assert_eq!(cohomology_group(&c2, 0, &m).unwrap().order(), 1);
    }

    #[test]
    fn representatives_are_independent() {
        let h = cohomology_group(&g("C2xC2"), 2, &CoefficientModule::cyclic(2)).unwrap();
        assert_eq!(h.representatives.len(), 3);
        for mask in 1..8u32 {
            let mut sum = Cochain::zero(&g("C2xC2"), &CoefficientModule::cyclic(2), 2);
            for (k, r) in h.representatives.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    sum = sum.add(r).unwrap();
                }
            }
            assert!(coboundary_witness(&sum).is_none());
        }
    }

    #[test]
    fn budget() {
        let err = cohomology_group_with_budget(&g("S3"), 3, &CoefficientModule::cyclic(6), 10);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }
}
