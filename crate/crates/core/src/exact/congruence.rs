use super::smith::ModularSmith;
use super::{gcd, IntMatrix};
use crate::error::{Error, Result};

/// All `x` in `(Z/N)^cols` with `A x = b (mod N)`, as a particular solution
/// plus independent kernel generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub modulus: i64,
    pub particular: Vec<i64>,
    /// `(generator, additive order)`; the kernel is their direct sum.
    pub kernel: Vec<(Vec<i64>, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Congruences {
    Infeasible,
    Solutions(SolutionSet),
}

impl Congruences {
    pub fn solutions(self) -> Option<SolutionSet> {
        match self {
            Congruences::Infeasible => None,
            Congruences::Solutions(s) => Some(s),
        }
    }
}

impl SolutionSet {
    /// Number of solutions, saturating at `u128::MAX`.
    pub fn count(&self) -> u128 {
        self.kernel
            .iter()
            .fold(1u128, |acc, (_, o)| acc.saturating_mul(*o as u128))
    }

    /// Every solution exactly once, in mixed-radix order of kernel coefficients.
    pub fn iter(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let radix: Vec<i64> = self.kernel.iter().map(|(_, o)| *o).collect();
        let mut coeffs = vec![0i64; radix.len()];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut x = self.particular.clone();
            for ((g, _), &c) in self.kernel.iter().zip(&coeffs) {
                if c != 0 {
                    for (xi, gi) in x.iter_mut().zip(g) {
                        *xi = (*xi + c * gi).rem_euclid(self.modulus);
                    }
                }
            }
            done = true;
            for (c, &r) in coeffs.iter_mut().zip(&radix) {
                *c += 1;
                if *c < r {
                    done = false;
                    break;
                }
                *c = 0;
            }
            Some(x)
        })
    }
}

/// Describes every solution of `A x = b (mod N)`.
pub fn solve_congruences(a: &IntMatrix, b: &[i64], modulus: i64) -> Result<Congruences> {
    if modulus <= 0 {
        return Err(Error::Dimension(format!("modulus {modulus} must be positive")));
    }
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    Ok(solve_rows(a.to_rows(), a.cols(), b, modulus))
}

pub(crate) fn solve_rows(rows: Vec<Vec<i64>>, cols: usize, b: &[i64], modulus: i64) -> Congruences {
    let companion = b.iter().map(|&x| vec![x]).collect();
    let snf = ModularSmith::compute(rows, cols, modulus, Some(companion));
    let rhs: Vec<i64> = snf
        .companion
        .as_ref()
        .expect("companion tracked")
        .iter()
        .map(|r| r[0])
        .collect();
    let mut y = vec![0i64; cols];
    for (t, &c) in rhs.iter().enumerate() {
        let d = snf.diag.get(t).copied().unwrap_or(0);
        if d == 0 {
            if c != 0 {
                return Congruences::Infeasible;
            }
            continue;
        }
        // d is a divisor of the modulus
        if c % d != 0 {
            return Congruences::Infeasible;
        }
        y[t] = c / d;
    }
    let particular: Vec<i64> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|t| snf.v[i][t] * y[t])
                .sum::<i64>()
                .rem_euclid(modulus)
        })
        .collect();
    let mut kernel = Vec::new();
    for t in 0..cols {
        let order = snf.kernel_order(t);
        if order == 1 {
            continue;
        }
        let step = modulus / order;
        kernel.push((
            (0..cols)
                .map(|i| (snf.v[i][t] * step).rem_euclid(modulus))
                .collect(),
            order,
        ));
    }
    debug_assert!(kernel.iter().all(|(_, o)| gcd(*o, modulus) == *o));
    Congruences::Solutions(SolutionSet {
        modulus,
        particular,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn solve(rows: &[Vec<i64>], b: &[i64], n: i64) -> Congruences {
        solve_congruences(&IntMatrix::from_rows(rows).unwrap(), b, n).unwrap()
    }

    #[test]
    fn two_x_zero_mod_four() {
        let s = solve(&[vec![2]], &[0], 4).solutions().unwrap();
        let all: BTreeSet<Vec<i64>> = s.iter().collect();
        assert_eq!(all, BTreeSet::from([vec![0], vec![2]]));
        assert_eq!(s.particular, vec![0]);
    }

    #[test]
    fn two_x_one_mod_four_infeasible() {
        assert_eq!(solve(&[vec![2]], &[1], 4), Congruences::Infeasible);
    }

    #[test]
    fn sum_and_difference_mod_three() {
        let s = solve(&[vec![1, 1], vec![1, -1]], &[1, 1], 3).solutions().unwrap();
        assert_eq!(s.count(), 1);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![vec![1, 0]]);
    }

    #[test]
    fn dimension_errors() {
        let a = IntMatrix::from_rows(&[vec![1, 2]]).unwrap();
        assert!(solve_congruences(&a, &[1, 2], 5).is_err());
        assert!(solve_congruences(&a, &[1], 0).is_err());
    }
}
