//! Smith normal form over `Z` and over `Z/N`.
//!
//! Both share one elimination engine. Over `Z/N` pivots are normalized to the
//! divisor `gcd(pivot, N)` by a unit column scaling, and every entry stays in
//! `[0, N)`, so no growth occurs. Over `Z` every operation is overflow-checked.

use super::{ext_gcd, gcd, inv_mod, normalizing_unit, IntMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// `u * a * v`
    pub diagonal: IntMatrix,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
    /// Nonzero invariant factors `d_1 | d_2 | ...`, all positive.
    pub factors: Vec<i64>,
}

/// Exact Smith normal form with unimodular `U`, `V` such that `U A V = D`.
///
/// Pivoting is deterministic: smallest nonzero absolute value, ties broken by
/// row-major position.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithDecomposition> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut e = Engine::new(a.to_rows(), cols, None);
    e.companion = Some(IntMatrix::identity(rows).to_rows());
    e.track_columns();
    e.diagonalize(0)?;
    e.enforce_divisibility()?;
    let diagonal = IntMatrix::from_rows(&e.a).unwrap_or_else(|_| IntMatrix::zeros(rows, cols));
    let factors = (0..rows.min(cols))
        .map(|i| e.a[i][i])
        .filter(|&d| d != 0)
        .collect();
    let u = IntMatrix::from_rows(&e.companion.unwrap()).unwrap_or_else(|_| IntMatrix::zeros(0, 0));
    let v = IntMatrix::from_rows(&e.v.unwrap()).unwrap_or_else(|_| IntMatrix::zeros(0, 0));
    Ok(SmithDecomposition {
        diagonal: if rows == 0 || cols == 0 {
            IntMatrix::zeros(rows, cols)
        } else {
            diagonal
        },
        u: if rows == 0 { IntMatrix::zeros(0, 0) } else { u },
        v: if cols == 0 { IntMatrix::zeros(0, 0) } else { v },
        factors,
    })
}

/// Diagonal form of a matrix over `Z/N`.
#[derive(Debug, Clone)]
pub(crate) struct ModularSmith {
    pub modulus: i64,
    /// `diag[t]` for `t < min(rows, cols)`: a divisor of `N` (or `0`).
    pub diag: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub v_inv: Vec<Vec<i64>>,
    /// The companion columns after the row transform (`U * companion`).
    pub companion: Option<Vec<Vec<i64>>>,
}

impl ModularSmith {
    pub fn compute(rows: Vec<Vec<i64>>, cols: usize, modulus: i64, companion: Option<Vec<Vec<i64>>>) -> Self {
        let reduced = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.rem_euclid(modulus)).collect())
            .collect();
        let mut e = Engine::new(reduced, cols, Some(modulus));
        e.companion = companion.map(|c| {
            c.into_iter()
                .map(|r| r.into_iter().map(|x| x.rem_euclid(modulus)).collect())
                .collect()
        });
        e.track_columns();
        e.diagonalize(0).expect("modular elimination cannot overflow");
        let diag = (0..e.rows.min(cols)).map(|i| e.a[i][i]).collect();
        ModularSmith {
            modulus,
            diag,
            v: e.v.unwrap(),
            v_inv: e.v_inv.unwrap(),
            companion: e.companion,
        }
    }

    /// Order of the cyclic factor `y_t` is allowed to range over in the kernel.
    pub fn kernel_order(&self, t: usize) -> i64 {
        match self.diag.get(t) {
            Some(&d) => gcd(d, self.modulus),
            None => self.modulus,
        }
    }
}

/// Generators of `{x : A x = 0 (mod N)}` with their additive orders.
///
/// The generators are independent: the kernel is their internal direct sum.
pub(crate) fn kernel_mod(rows: Vec<Vec<i64>>, cols: usize, modulus: i64) -> (ModularSmith, Vec<(Vec<i64>, i64)>) {
    let snf = ModularSmith::compute(rows, cols, modulus, None);
    let mut gens = Vec::new();
    for t in 0..cols {
        let order = snf.kernel_order(t);
        if order == 1 {
            continue;
        }
        let step = modulus / order;
        let g: Vec<i64> = (0..cols).map(|i| (snf.v[i][t] * step).rem_euclid(modulus)).collect();
        gens.push((g, order));
    }
    (snf, gens)
}

/// Cyclic decomposition of `Z^cols / (rowspan(relations) + N Z^cols)`.
///
/// Returns `(order, generator)` pairs for the nontrivial factors; generators
/// are row vectors in the original coordinates.
pub(crate) fn quotient_mod(relations: Vec<Vec<i64>>, cols: usize, modulus: i64) -> Vec<(i64, Vec<i64>)> {
    let snf = ModularSmith::compute(relations, cols, modulus, None);
    (0..cols)
        .filter_map(|t| {
            let order = snf.kernel_order(t);
            (order > 1).then(|| (order, snf.v_inv[t].clone()))
        })
        .collect()
}

struct Engine {
    a: Vec<Vec<i64>>,
    rows: usize,
    cols: usize,
    modulus: Option<i64>,
    companion: Option<Vec<Vec<i64>>>,
    v: Option<Vec<Vec<i64>>>,
    v_inv: Option<Vec<Vec<i64>>>,
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

impl Engine {
    fn new(a: Vec<Vec<i64>>, cols: usize, modulus: Option<i64>) -> Self {
        Engine {
            rows: a.len(),
            a,
            cols,
            modulus,
            companion: None,
            v: None,
            v_inv: None,
        }
    }

    fn track_columns(&mut self) {
        self.v = Some(identity_rows(self.cols));
        self.v_inv = Some(identity_rows(self.cols));
    }

    /// `p*x + q*y`, reduced or overflow-checked.
    #[inline]
    fn lin(modulus: Option<i64>, p: i64, x: i64, q: i64, y: i64) -> Result<i64> {
        match modulus {
            Some(n) => Ok((p.rem_euclid(n) * x + q.rem_euclid(n) * y).rem_euclid(n)),
            None => p
                .checked_mul(x)
                .and_then(|a| q.checked_mul(y).and_then(|b| a.checked_add(b)))
                .ok_or(Error::Overflow("Smith normal form")),
        }
    }

    fn key(&self, x: i64) -> i64 {
        match self.modulus {
            Some(n) => gcd(x, n),
            None => x.abs(),
        }
    }

    fn combine_rows(m: &mut [Vec<i64>], modulus: Option<i64>, t: usize, i: usize, c: [i64; 4], from: usize) -> Result<()> {
        let [p, q, r, s] = c;
        let (lo, hi) = if t < i { (t, i) } else { (i, t) };
        let (head, tail) = m.split_at_mut(hi);
        let (rt, ri) = if t < i {
            (&mut head[lo], &mut tail[0])
        } else {
            (&mut tail[0], &mut head[lo])
        };
        for k in from..rt.len() {
            let (x, y) = (rt[k], ri[k]);
            if x == 0 && y == 0 {
                continue;
            }
            rt[k] = Self::lin(modulus, p, x, q, y)?;
            ri[k] = Self::lin(modulus, r, x, s, y)?;
        }
        Ok(())
    }

    /// `row_t <- p row_t + q row_i`, `row_i <- r row_t + s row_i` (determinant 1).
    fn row_op(&mut self, t: usize, i: usize, c: [i64; 4]) -> Result<()> {
        Self::combine_rows(&mut self.a, self.modulus, t, i, c, 0)?;
        if let Some(comp) = self.companion.as_mut() {
            Self::combine_rows(comp, self.modulus, t, i, c, 0)?;
        }
        Ok(())
    }

    /// `col_t <- p col_t + q col_j`, `col_j <- r col_t + s col_j` (determinant 1).
    fn col_op(&mut self, t: usize, j: usize, c: [i64; 4], from_row: usize) -> Result<()> {
        let [p, q, r, s] = c;
        let modulus = self.modulus;
        for row in self.a[from_row..].iter_mut() {
            let (x, y) = (row[t], row[j]);
            if x == 0 && y == 0 {
                continue;
            }
            row[t] = Self::lin(modulus, p, x, q, y)?;
            row[j] = Self::lin(modulus, r, x, s, y)?;
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                let (x, y) = (row[t], row[j]);
                row[t] = Self::lin(modulus, p, x, q, y)?;
                row[j] = Self::lin(modulus, r, x, s, y)?;
            }
        }
        if let Some(vi) = self.v_inv.as_mut() {
            // F = [[p, r], [q, s]] acts on columns; F^-1 = [[s, -r], [-q, p]] acts on rows.
            Self::combine_rows(vi, modulus, t, j, [s, -r, -q, p], 0)?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(c) = self.companion.as_mut() {
            c.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(vi) = self.v_inv.as_mut() {
            vi.swap(i, j);
        }
    }

    /// Multiplies column `t` by a unit `u` with inverse `u_inv`.
    fn scale_col(&mut self, t: usize, u: i64, u_inv: i64) -> Result<()> {
        let modulus = self.modulus;
        for row in self.a.iter_mut() {
            row[t] = Self::lin(modulus, u, row[t], 0, 0)?;
        }
        if let Some(v) = self.v.as_mut() {
            for row in v.iter_mut() {
                row[t] = Self::lin(modulus, u, row[t], 0, 0)?;
            }
        }
        if let Some(vi) = self.v_inv.as_mut() {
            for x in vi[t].iter_mut() {
                *x = Self::lin(modulus, u_inv, *x, 0, 0)?;
            }
        }
        Ok(())
    }

    fn normalize_pivot(&mut self, t: usize) -> Result<()> {
        let p = self.a[t][t];
        match self.modulus {
            Some(n) => {
                let u = normalizing_unit(p, n);
                if u != 1 {
                    let u_inv = inv_mod(u, n).expect("normalizing unit is invertible");
                    self.scale_col(t, u, u_inv)?;
                }
            }
            None => {
                if p < 0 {
                    self.scale_col(t, -1, -1)?;
                }
            }
        }
        Ok(())
    }

    fn divides(&self, g: i64, a: i64) -> bool {
        g != 0 && a % g == 0
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.a[i][j];
                if x == 0 {
                    continue;
                }
                let k = self.key(x);
                if best.is_none_or(|(b, _, _)| k < b) {
                    best = Some((k, i, j));
                    if k == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn diagonalize(&mut self, start: usize) -> Result<()> {
        let mut t = start;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            self.normalize_pivot(t)?;
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows {
                    let a = self.a[i][t];
                    if a == 0 {
                        continue;
                    }
                    let g = self.a[t][t];
                    if self.divides(g, a) {
                        self.row_op(t, i, [1, 0, -(a / g), 1])?;
                    } else {
                        let (h, s, w) = ext_gcd(g, a);
                        self.row_op(t, i, [s, w, -(a / h), g / h])?;
                        self.normalize_pivot(t)?;
                    }
                }
                for j in t + 1..self.cols {
                    let a = self.a[t][j];
                    if a == 0 {
                        continue;
                    }
                    let g = self.a[t][t];
                    if self.divides(g, a) {
                        self.col_op(t, j, [1, 0, -(a / g), 1], t)?;
                    } else {
                        let (h, s, w) = ext_gcd(g, a);
                        self.col_op(t, j, [s, w, -(a / h), g / h], t)?;
                        self.normalize_pivot(t)?;
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }
            t += 1;
        }
        Ok(())
    }

    fn enforce_divisibility(&mut self) -> Result<()> {
        let n = self.rows.min(self.cols);
        loop {
            let mut bad = None;
            'search: for i in 0..n {
                for j in i + 1..n {
                    let (di, dj) = (self.a[i][i], self.a[j][j]);
                    if di != 0 && dj % di != 0 {
                        bad = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = bad else {
                return Ok(());
            };
            // row_i += row_j puts d_j next to d_i; re-eliminate from i.
            self.row_op(i, j, [1, 1, 0, 1])?;
            self.diagonalize(i)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>]) -> SmithDecomposition {
        let a = IntMatrix::from_rows(rows).unwrap();
        let s = smith_normal_form(&a).unwrap();
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.diagonal);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
        for w in s.factors.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        s
    }

    #[test]
    fn diag_two_three() {
        assert_eq!(check(&[vec![2, 0], vec![0, 3]]).factors, vec![1, 6]);
    }

    #[test]
    fn zero_and_unit() {
        assert!(check(&[vec![0, 0], vec![0, 0]]).factors.is_empty());
        assert_eq!(check(&[vec![1, 0], vec![0, 0]]).factors, vec![1]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(check(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).factors, vec![2, 6, 12]);
        assert_eq!(check(&[vec![6, 4], vec![2, 8], vec![0, 10]]).factors, vec![2, 10]);
        check(&[vec![3, 5, 7, 11]]);
    }

    #[test]
    fn modular_kernel_small() {
        // 2x = 0 mod 4
        let (_, k) = kernel_mod(vec![vec![2]], 1, 4);
        assert_eq!(k, vec![(vec![2], 2)]);
        // x + y = 0, x - y = 0 mod 3
        let (_, k) = kernel_mod(vec![vec![1, 1], vec![1, 2]], 2, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn modular_quotient_small() {
        // Z^2 / <(2, 0), (0, 3)> + 6 Z^2 = Z/2 x Z/3
        let q = quotient_mod(vec![vec![2, 0], vec![0, 3]], 2, 6);
        let mut orders: Vec<i64> = q.iter().map(|(o, _)| *o).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 3]);
    }
}
