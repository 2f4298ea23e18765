//! Exact arithmetic: roots of unity as exponents modulo `N`, integer
//! matrices, Smith normal form and linear congruence systems.

mod congruence;
mod matrix;
mod smith;
mod unity;

pub use congruence::{solve_congruences, Congruences, SolutionSet};
pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};
pub use unity::UnityExponent;

pub(crate) use congruence::solve_rows;
pub(crate) use smith::{kernel_mod, quotient_mod};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

pub fn lcm_usize(a: usize, b: usize) -> usize {
    lcm(a as i64, b as i64) as usize
}

/// `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn inv_mod(a: i64, n: i64) -> Option<i64> {
    let (g, s, _) = ext_gcd(a.rem_euclid(n), n);
    (g == 1).then(|| s.rem_euclid(n))
}

/// A unit `u` modulo `n` with `a * u = gcd(a, n) (mod n)`.
pub(crate) fn normalizing_unit(a: i64, n: i64) -> i64 {
    let a = a.rem_euclid(n);
    let g = gcd(a, n);
    if n == 1 {
        return 0;
    }
    let (ap, np) = (a / g, n / g);
    let base = if np == 1 { 1 } else { inv_mod(ap, np).expect("coprime after division") };
    let mut u = base;
    while gcd(u, n) != 1 {
        u += np;
    }
    u % n
}

/// Orders of the cyclic factors, merged into invariant factors `d_1 | d_2 | ...`
/// (trivial factors dropped).
pub fn invariant_factors(cyclic_orders: &[i64]) -> Vec<i64> {
    use std::collections::BTreeMap;
    // prime -> exponents of the prime-power parts
    let mut parts: BTreeMap<i64, Vec<u32>> = BTreeMap::new();
    for &d in cyclic_orders {
        let mut d = d.abs();
        let mut p = 2;
        while d > 1 {
            if p * p > d {
                parts.entry(d).or_default().push(1);
                break;
            }
            let mut e = 0;
            while d % p == 0 {
                d /= p;
                e += 1;
            }
            if e > 0 {
                parts.entry(p).or_default().push(e);
            }
            p += 1;
        }
    }
    let len = parts.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1i64; len];
    for (p, mut exps) in parts {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            factors[len - 1 - i] *= p.pow(e);
        }
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        for a in -20..20 {
            for b in -20..20 {
                let (g, s, t) = ext_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(s * a + t * b, g);
            }
        }
    }

    #[test]
    fn normalizing_units() {
        for n in 1..30 {
            for a in 0..n {
                let u = normalizing_unit(a, n);
                if n > 1 {
                    assert_eq!(gcd(u, n), 1, "a={a} n={n}");
                }
                assert_eq!((a * u).rem_euclid(n), gcd(a, n) % n);
            }
        }
    }

    #[test]
    fn invariant_factor_merge() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[2, 2, 4]), vec![2, 2, 4]);
        assert_eq!(invariant_factors(&[4, 6, 1]), vec![2, 12]);
        assert_eq!(invariant_factors(&[1, 1]), Vec::<i64>::new());
    }
}
