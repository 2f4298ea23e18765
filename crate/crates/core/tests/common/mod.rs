#![allow(dead_code)]

use std::io::Write;

use gcrossed::group::{build_group, FiniteGroup, GroupSpec};

pub fn group(name: &str) -> FiniteGroup {
    build_group(&GroupSpec::builtin(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `C_m x| C_n` with the generator of `C_n` acting by `x -> k x`; id `a + m*b`.
pub fn semidirect(m: usize, n: usize, k: usize) -> FiniteGroup {
    let pow = |b: usize| (0..b).fold(1usize, |acc, _| acc * k % m);
    let order = m * n;
    let rows = (0..order)
        .map(|x| {
            let (a, b) = (x % m, x / m);
            (0..order)
                .map(|y| {
                    let (c, d) = (y % m, y / m);
                    (a + pow(b) * c) % m + m * ((b + d) % n)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(rows).unwrap().with_name(format!("C{m}:{k}C{n}"))
}

/// Dicyclic group of order `4n`: `a^k x^f` with `a^{2n} = 1`, `x^2 = a^n`,
/// `x a x^-1 = a^-1`; id `k + 2n*f`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let order = 2 * m;
    let rows = (0..order)
        .map(|x| {
            let (k1, f1) = (x % m, x / m);
            (0..order)
                .map(|y| {
                    let (k2, f2) = (y % m, y / m);
                    // x^f1 a^k2 = a^{(-1)^f1 k2} x^f1
                    let k = if f1 == 0 { k1 + k2 } else { k1 + m - k2 };
                    let (k, f) = if f1 == 1 && f2 == 1 { (k + n, 0) } else { (k, f1 + f2) };
                    k % m + m * f
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(rows).unwrap().with_name(format!("Dic{n}"))
}

/// Every group of order at most 8, up to isomorphism.
pub fn groups_up_to_8() -> Vec<FiniteGroup> {
    ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "C2xC2xC2", "D8", "Q8"]
        .into_iter()
        .map(group)
        .collect()
}

/// A spread of groups of order at most 16, including all fourteen of order 16.
pub fn groups_up_to_16() -> Vec<FiniteGroup> {
    let mut out = groups_up_to_8();
    for name in [
        "C9", "C3xC3", "D10", "C10", "C11", "C12", "C2xC6", "D12", "A4", "C13", "C14", "D14", "C15", "C16",
        "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "D16", "D8xC2", "Q8xC2",
    ] {
        out.push(group(name));
    }
    out.push(dicyclic(3));
    out.push(dicyclic(4));
    out.push(semidirect(8, 2, 5));
    out.push(semidirect(8, 2, 3));
    out.push(semidirect(4, 4, 3));
    // C2^2 x| C4 with the generator swapping the factors
    out.push(swap_semidirect());
    // Pauli group: C4 o D8
    out.push(pauli());
    out
}

fn swap_semidirect() -> FiniteGroup {
    // (v, b) with v in C2^2 as bits, b in C4; generator swaps the two bits
    let act = |b: usize, v: usize| if b % 2 == 1 { ((v & 1) << 1) | (v >> 1) } else { v };
    let rows = (0..16)
        .map(|x| {
            let (v, b) = (x % 4, x / 4);
            (0..16).map(|y| (v ^ act(b, y % 4)) + 4 * ((b + y / 4) % 4)).collect()
        })
        .collect();
    FiniteGroup::from_table(rows).unwrap().with_name("C2^2:C4")
}

fn pauli() -> FiniteGroup {
    // 2x2 matrices i^k X^a Z^b; Z X = -X Z
    let order = 16;
    let enc = |k: usize, a: usize, b: usize| k % 4 + 4 * a + 8 * b;
    let rows = (0..order)
        .map(|x| {
            let (k1, a1, b1) = (x % 4, (x / 4) % 2, x / 8);
            (0..order)
                .map(|y| {
                    let (k2, a2, b2) = (y % 4, (y / 4) % 2, y / 8);
                    // Z^b1 X^a2 = (-1)^{b1 a2} X^a2 Z^b1
                    let sign = 2 * (b1 * a2);
                    enc(k1 + k2 + sign, (a1 + a2) % 2, (b1 + b2) % 2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(rows).unwrap().with_name("Pauli")
}

/// Writes past the test harness capture so the line shows in plain `cargo test` output.
pub fn report(line: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}
