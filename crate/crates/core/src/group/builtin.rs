//! Named groups and the group input schema.
//!
//! Canonical element orders:
//! - `C{n}`: `i` is the residue `i mod n`.
//! - `D{2n}`: `r^k s^f` has id `k + n*f`, with `s r s = r^-1`.
//! - `S{n}` / `A{n}`: permutations of `0..n` in lexicographic order of their
//!   image lists; products apply the left factor first.
//! - `Q8`: `1, -1, i, -i, j, -j, k, -k`.
//! - `AxB...`: direct products, id `i * |B| + j` (leftmost factor most significant).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Builtin {
        builtin: String,
    },
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Generators {
        generators: Vec<String>,
        degree: usize,
    },
}

impl GroupSpec {
    pub fn builtin(name: &str) -> Self {
        GroupSpec::Builtin {
            builtin: name.to_string(),
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Builtin { builtin } => builtin_group(builtin),
        GroupSpec::Table { name, order, table } => {
            if table.len() != *order {
                return Err(Error::NotAGroup(format!(
                    "declared order {order} but table has {} rows",
                    table.len()
                )));
            }
            let g = FiniteGroup::from_table(table.clone())?;
            Ok(match name {
                Some(n) => g.with_name(n.clone()),
                None => g,
            })
        }
        GroupSpec::Generators { generators, degree } => {
            let perms = generators
                .iter()
                .map(|s| parse_cycles(s, *degree))
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_permutations(*degree, &perms)
        }
    }
}

fn builtin_group(name: &str) -> Result<FiniteGroup> {
    let factors: Vec<&str> = name.split('x').collect();
    if factors.len() > 1 {
        let mut acc = single_builtin(factors[0])?;
        for f in &factors[1..] {
            acc = acc.direct_product(&single_builtin(f)?);
        }
        return Ok(acc.with_name(name));
    }
    single_builtin(name)
}

fn single_builtin(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let param = |prefix: char| -> Result<usize> {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(unknown)
    };
    let group = match name.chars().next() {
        Some('C') => {
            let n = param('C')?;
            if n == 0 {
                return Err(unknown());
            }
            cyclic(n)
        }
        Some('D') => {
            let m = param('D')?;
            if m < 2 || m % 2 != 0 {
                return Err(unknown());
            }
            dihedral(m / 2)
        }
        Some('S') => {
            let n = param('S')?;
            if !(1..=5).contains(&n) {
                return Err(unknown());
            }
            permutation_group(n, false)?
        }
        Some('A') => {
            let n = param('A')?;
            if !(1..=5).contains(&n) {
                return Err(unknown());
            }
            permutation_group(n, true)?
        }
        Some('Q') if name == "Q8" => quaternion(),
        _ => return Err(unknown()),
    };
    Ok(group.with_name(name))
}

fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    FiniteGroup::from_flat(n, table).expect("cyclic table is a group")
}

fn dihedral(n: usize) -> FiniteGroup {
    // (k1, f1)(k2, f2) = (k1 + (-1)^f1 k2, f1 + f2)
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            let (k1, f1) = (a % n, a / n);
            let (k2, f2) = (b % n, b / n);
            let k = (if f1 == 0 { k1 + k2 } else { k1 + n - k2 }) % n;
            table[a * order + b] = k + n * ((f1 + f2) % 2);
        }
    }
    let labels = (0..order)
        .map(|x| match (x % n, x / n) {
            (0, 0) => "e".to_string(),
            (k, 0) => format!("r{k}"),
            (0, _) => "s".to_string(),
            (k, _) => format!("r{k}s"),
        })
        .collect();
    FiniteGroup::from_flat(order, table)
        .expect("dihedral table is a group")
        .with_labels(labels)
}

fn quaternion() -> FiniteGroup {
    // Units 1,i,j,k with a sign bit; id = 2*unit + sign.
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (u, neg) = UNIT[a / 2][b / 2];
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            table[a * 8 + b] = 2 * u + usize::from(sign);
        }
    }
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_flat(8, table)
        .expect("quaternion table is a group")
        .with_labels(labels)
}

fn permutation_group(n: usize, even_only: bool) -> Result<FiniteGroup> {
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if !even_only || is_even(&p) {
            perms.push(p.clone());
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    FiniteGroup::from_permutation_list(&perms, &index)
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Parses cycle notation such as `"(0 1 2)(3 4)"` into an image list.
pub(crate) fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "()" {
        return Ok(perm);
    }
    let mut moved = vec![false; degree];
    for chunk in trimmed.split(')') {
        let body = chunk.trim();
        if body.is_empty() {
            continue;
        }
        let body = body
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("malformed cycle in `{s}`")))?;
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        for (idx, &x) in points.iter().enumerate() {
            if x >= degree || moved[x] {
                return Err(Error::Parse(format!("point {x} invalid or repeated in `{s}`")));
            }
            moved[x] = true;
            perm[x] = points[(idx + 1) % points.len()];
        }
    }
    Ok(perm)
}
