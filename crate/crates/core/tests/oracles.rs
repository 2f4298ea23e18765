//! Brute-force oracles for computed values and property tests for invariants.

mod common;

use std::collections::HashSet;
use std::sync::Arc;

use gcrossed::center::{simple_census, TwistedGroupData};
use gcrossed::cohomology::{
    cohomology_group, count_splittings, differential, is_coboundary, Cochain, CoefficientModule,
};
use gcrossed::crossed::gradings_of_rep;
use gcrossed::exact::{smith_normal_form, solve_congruences, Congruences, IntMatrix, UnityExponent};
use gcrossed::group::{count_homomorphisms, find_isomorphism, FiniteGroup};
use gcrossed::obstruction::{extension_cocycle, fibered_enrichment_extends};
use gcrossed::omega::{stored_classes, unity_classes};
use gcrossed::subcat::{centralizer_subcat, contains, enumerate_subcats};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{dicyclic, group, groups_up_to_16, semidirect};

const SMALL: [&str; 8] = ["C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "Q8"];

fn relabel(g: &FiniteGroup, seed: u64) -> (FiniteGroup, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (2..n).rev() {
        let j = rng.gen_range(1..=i);
        perm.swap(i, j);
    }
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let rows = (0..n)
        .map(|x| (0..n).map(|y| perm[g.mul(inv[x], inv[y])]).collect())
        .collect();
    (FiniteGroup::from_table(rows).unwrap(), perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(gi in 0..SMALL.len(), modulus in 1usize..7, degree in 0usize..3, seed: u64) {
        let g = group(SMALL[gi]);
        let a = CoefficientModule::cyclic(modulus);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = Cochain::random(&g, &a, degree, false, &mut rng).unwrap();
        prop_assert!(differential(&differential(&c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn coboundaries_have_witnesses(gi in 0..SMALL.len(), modulus in 2usize..7, degree in 0usize..3, seed: u64) {
        let g = group(SMALL[gi]);
        let a = CoefficientModule::cyclic(modulus);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = Cochain::random(&g, &a, degree, true, &mut rng).unwrap();
        let dx = differential(&x).unwrap();
        let w = is_coboundary(&dx).expect("d x is a coboundary");
        prop_assert_eq!(differential(&w).unwrap(), dx);
    }

    #[test]
    fn cohomology_ignores_labels(gi in 0..5usize, degree in 0usize..4, modulus in 2usize..5, seed: u64) {
        let g = group(SMALL[gi]);
        let (h, _) = relabel(&g, seed);
        let a = CoefficientModule::cyclic(modulus);
        prop_assert_eq!(
            cohomology_group(&g, degree, &a).unwrap().invariant_factors,
            cohomology_group(&h, degree, &a).unwrap().invariant_factors
        );
    }

    #[test]
    fn congruence_solutions_match_enumeration(
        rows in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 1..4),
        rhs_seed: u64,
        modulus in 2i64..9,
    ) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(rhs_seed);
        let b: Vec<i64> = (0..rows.len()).map(|_| rng.gen_range(0..modulus)).collect();
        let satisfies = |x: &[i64]| {
            rows.iter().zip(&b).all(|(r, &bi)| (r.iter().zip(x).map(|(c, v)| c * v).sum::<i64>() - bi).rem_euclid(modulus) == 0)
        };
        let mut brute = HashSet::new();
        for x0 in 0..modulus {
            for x1 in 0..modulus {
                for x2 in 0..modulus {
                    if satisfies(&[x0, x1, x2]) {
                        brute.insert(vec![x0, x1, x2]);
                    }
                }
            }
        }
        match solve_congruences(&a, &b, modulus).unwrap() {
            Congruences::Infeasible => prop_assert!(brute.is_empty()),
            Congruences::Solutions(s) => {
                let found: HashSet<Vec<i64>> = s.iter().map(|x| x.iter().map(|v| v.rem_euclid(modulus)).collect()).collect();
                prop_assert_eq!(s.count() as usize, found.len());
                prop_assert_eq!(found, brute);
            }
        }
    }

    #[test]
    fn smith_form_is_a_factorization(rows in prop::collection::vec(prop::collection::vec(-9i64..10, 1..5), 1..5)) {
        let width = rows[0].len();
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|mut r| { r.resize(width, 0); r }).collect();
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a).unwrap();
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.diagonal.clone());
        prop_assert_eq!(s.u.determinant().unwrap().abs(), 1);
        prop_assert_eq!(s.v.determinant().unwrap().abs(), 1);
        for w in s.factors.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        for i in 0..s.diagonal.rows() {
            for j in 0..s.diagonal.cols() {
                let d = s.diagonal.row(i)[j];
                if i != j { prop_assert_eq!(d, 0); }
                else if i < s.factors.len() { prop_assert_eq!(d, s.factors[i]); }
                else { prop_assert_eq!(d, 0); }
            }
        }
    }

    #[test]
    fn unity_exponents_behave_like_roots(v in -50i64..50, w in -50i64..50, n in 1i64..24, k in 1i64..5, p in -6i64..7) {
        let x = UnityExponent::new(v, n);
        let y = UnityExponent::new(w, n);
        prop_assert!((x + y).lift(n * k).same_root(x.lift(n * k) + y.lift(n * k)));
        prop_assert!(x.pow(x.order()).is_one());
        prop_assert!(x.pow(p).same_root(x.lift(n * k).pow(p)));
        prop_assert_eq!(x - x, UnityExponent::one(n));
    }

    #[test]
    fn containment_is_an_order_reversed_by_centralizers(gi in 0..6usize, k_seed: u64, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let name = SMALL[gi];
        let g = group(name);
        let classes = stored_classes(name, &g).unwrap();
        let omega = classes[(k_seed % classes.len() as u64) as usize].clone();
        let data = Arc::new(TwistedGroupData::new(&g, omega).unwrap());
        let subs = enumerate_subcats(&data).unwrap();
        let (a, b, c) = (picks[0].get(&subs), picks[1].get(&subs), picks[2].get(&subs));
        prop_assert!(contains(a, a).unwrap());
        if contains(a, b).unwrap() && contains(b, a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if contains(a, b).unwrap() && contains(b, c).unwrap() {
            prop_assert!(contains(a, c).unwrap());
        }
        if contains(a, b).unwrap() {
            let (ap, bp) = (centralizer_subcat(a).unwrap(), centralizer_subcat(b).unwrap());
            prop_assert!(contains(&bp, &ap).unwrap());
        }
    }

    #[test]
    fn torsor_count_ignores_the_section(gi in 0..64usize, seed: u64) {
        let groups = groups_up_to_16();
        let e = &groups[gi % groups.len()];
        let normals = e.normal_subgroups().unwrap();
        let n = &normals[(seed % normals.len() as u64) as usize];
        let report = fibered_enrichment_extends(e, n).unwrap();
        // any other centralizing section gives a cohomologous cocycle
        let q = e.quotient(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut lambda = vec![usize::MAX; q.group.order()];
        for c in q.group.elements() {
            let options: Vec<usize> = e
                .elements()
                .filter(|&x| q.projection.apply(x) == c && n.elements().iter().all(|&y| e.commutes(x, y)))
                .collect();
            if options.is_empty() {
                prop_assert!(!report.extends);
                return Ok(());
            }
            lambda[c] = options[rng.gen_range(0..options.len())];
        }
        let z = e.center().intersection(n);
        let zg = e.subgroup_as_group(&z);
        let module = CoefficientModule::from_group(zg.clone()).unwrap();
        let values: Vec<usize> = q.group.elements().flat_map(|a| {
            let lambda = &lambda;
            let q = &q;
            let z = &z;
            q.group.elements().map(move |b| {
                let x = e.mul(e.inv(lambda[q.group.mul(a, b)]), e.mul(lambda[a], lambda[b]));
                z.index_of(x).unwrap()
            })
        }).collect();
        let class = Cochain::from_values(&q.group, &module, 2, values).unwrap();
        let splittings = count_splittings(&class).unwrap();
        prop_assert_eq!(report.extends, splittings > 0);
        if report.extends {
            prop_assert_eq!(report.torsor_count, Some(splittings));
            prop_assert_eq!(splittings, count_homomorphisms(&q.group, &zg) as u128);
        }
    }
}

fn groups_up_to_24() -> Vec<FiniteGroup> {
    let mut out = groups_up_to_16();
    for name in ["C17", "C18", "D18", "C3xS3", "C3xC6", "C19", "C20", "D20", "C2xC10", "C21", "C22", "D22", "C23"] {
        out.push(group(name));
    }
    for name in ["S4", "C24", "D24", "A4xC2", "C2xC12", "S3xC4", "D12xC2", "Q8xC3", "C2xC2xC6", "S3xC2xC2"] {
        out.push(group(name));
    }
    out.push(dicyclic(5));
    out.push(dicyclic(6));
    out.push(semidirect(3, 8, 2));
    out.push(semidirect(5, 4, 2));
    out.push(semidirect(7, 3, 2));
    out
}

#[test]
fn extension_identity_up_to_order_24() {
    let mut pairs = 0;
    for e in groups_up_to_24() {
        for n in e.normal_subgroups().unwrap() {
            let data = extension_cocycle(&e, &n).unwrap();
            assert!(data.satisfies_cocycle_identity(), "{} over {:?}", e.display_name(), n.elements());
            assert!(data.n.iter().all(|&x| n.contains(x)));
            assert_eq!(data.section()[0], 0);
            pairs += 1;
        }
    }
    assert!(pairs > 300, "{pairs}");
}

#[test]
fn order_sixteen_families_are_distinct() {
    let sixteen: Vec<FiniteGroup> = groups_up_to_16().into_iter().filter(|g| g.order() == 16).collect();
    assert_eq!(sixteen.len(), 14);
    for (i, a) in sixteen.iter().enumerate() {
        for b in &sixteen[i + 1..] {
            assert!(find_isomorphism(a, b).is_none(), "{} ~ {}", a.display_name(), b.display_name());
        }
    }
}

#[test]
fn stored_cocycles_match_recomputation_for_order_eight() {
    for name in ["D8", "Q8"] {
        let g = group(name);
        assert_eq!(stored_classes(name, &g).unwrap(), unity_classes(&g).unwrap(), "{name}");
    }
}

#[test]
fn h3_class_counts_match_known_groups() {
    // |H^3(G, C^x)| = |H_3(G, Z)|
    for (name, count) in [("C2", 2), ("C3", 3), ("C4", 4), ("C6", 6), ("C2xC2", 8), ("S3", 6), ("D8", 16), ("Q8", 8)] {
        assert_eq!(stored_classes(name, &group(name)).unwrap().len(), count, "{name}");
    }
}

#[test]
fn rep_gradings_follow_center_subgroups() {
    for name in SMALL {
        let g = group(name);
        let z = g.center();
        let subgroups = g.all_subgroups().unwrap().into_iter().filter(|h| h.is_subset_of(&z)).count();
        let gradings = gradings_of_rep(&g).unwrap();
        assert_eq!(gradings.len(), subgroups, "{name}");
        let orders: HashSet<usize> = gradings.iter().map(|x| x.grading_order()).collect();
        assert!(orders.contains(&1) && orders.contains(&z.order()));
    }
}

/// Projective irreducibles counted by brute force: `beta`-regular classes,
/// with `beta_a` computed here straight from `omega`.
fn brute_simple_count(g: &FiniteGroup, omega: &Cochain) -> usize {
    let n = omega.module().order() as i64;
    let w = |a: usize, b: usize, c: usize| omega.at(&[a, b, c]) as i64;
    let beta = |a: usize, x: usize, y: usize| {
        let xy = g.mul(x, y);
        let a_xy = g.mul(g.mul(g.inv(xy), a), xy);
        let a_x = g.mul(g.mul(g.inv(x), a), x);
        (w(a, x, y) + w(x, y, a_xy) - w(x, a_x, y)).rem_euclid(n)
    };
    let mut seen = HashSet::new();
    let mut total = 0;
    for a in g.elements() {
        if seen.contains(&a) {
            continue;
        }
        for x in g.elements() {
            seen.insert(g.mul(g.mul(x, a), g.inv(x)));
        }
        let c: Vec<usize> = g.elements().filter(|&x| g.mul(x, a) == g.mul(a, x)).collect();
        let mut classes_seen = HashSet::new();
        for &x in &c {
            if classes_seen.contains(&x) {
                continue;
            }
            for &h in &c {
                classes_seen.insert(g.mul(g.mul(h, x), g.inv(h)));
            }
            let regular = c
                .iter()
                .filter(|&&h| g.mul(h, x) == g.mul(x, h))
                .all(|&h| beta(a, x, h) == beta(a, h, x));
            if regular {
                total += 1;
            }
        }
    }
    total
}

#[test]
fn census_matches_brute_force_on_battery() {
    for name in SMALL {
        let g = group(name);
        for (k, omega) in stored_classes(name, &g).unwrap().into_iter().enumerate() {
            let expected = brute_simple_count(&g, &omega);
            let census = simple_census(&TwistedGroupData::new(&g, omega).unwrap()).unwrap();
            assert_eq!(census.simple_count, expected, "{name} omega #{k}");
            assert_eq!(census.fpdim_square_sum, g.order() * g.order());
        }
    }
}

/// `S(L, M, B)` counted by trying tables directly against the three axioms,
/// with `beta` recomputed from `omega`.
fn brute_subcat_count(g: &FiniteGroup, omega: &Cochain) -> usize {
    let n_omega = omega.module().order() as i64;
    let k = g.exponent() as i64 * n_omega;
    let s = k / n_omega;
    let w = |a: usize, b: usize, c: usize| omega.at(&[a, b, c]) as i64;
    let beta = |a: usize, x: usize, y: usize| {
        let xy = g.mul(x, y);
        let a_xy = g.mul(g.mul(g.inv(xy), a), xy);
        let a_x = g.mul(g.mul(g.inv(x), a), x);
        w(a, x, y) + w(x, y, a_xy) - w(x, a_x, y)
    };
    let normals = g.normal_subgroups().unwrap();
    let mut total = 0;
    for l in &normals {
        for m in &normals {
            if !l.elements().iter().all(|&x| m.elements().iter().all(|&y| g.mul(x, y) == g.mul(y, x))) {
                continue;
            }
            let (le, me) = (l.elements(), m.elements());
            let cells = le.len() * me.len();
            let mut table = vec![0i64; cells];
            let b = |t: &[i64], x: usize, y: usize| t[l.index_of(x).unwrap() * me.len() + m.index_of(y).unwrap()];
            loop {
                let t = &table;
                let ok = le.iter().all(|&x| {
                    me.iter().all(|&p| {
                        me.iter().all(|&q| (b(t, x, g.mul(p, q)) + s * beta(x, p, q) - b(t, x, p) - b(t, x, q)).rem_euclid(k) == 0)
                    })
                }) && le.iter().all(|&x| {
                    le.iter().all(|&y| {
                        me.iter().all(|&p| (b(t, g.mul(x, y), p) - s * beta(p, x, y) - b(t, x, p) - b(t, y, p)).rem_euclid(k) == 0)
                    })
                }) && g.elements().all(|h| {
                    let hi = g.inv(h);
                    le.iter().all(|&x| {
                        me.iter().all(|&p| {
                            let lhs = b(t, g.mul(g.mul(hi, x), h), p);
                            let rhs = s * (beta(x, h, p) + beta(x, g.mul(h, p), hi) - beta(x, h, hi))
                                + b(t, x, g.mul(g.mul(h, p), hi));
                            (lhs - rhs).rem_euclid(k) == 0
                        })
                    })
                });
                if ok {
                    total += 1;
                }
                let mut i = 0;
                while i < cells && table[i] == k - 1 {
                    table[i] = 0;
                    i += 1;
                }
                if i == cells {
                    break;
                }
                table[i] += 1;
            }
        }
    }
    total
}

#[test]
fn subcategory_counts_match_brute_force() {
    // every configuration here stays within about 10^7 candidate tables
    let c2 = group("C2");
    let mut cases = vec![("C2", c2.clone(), stored_classes("C2", &c2).unwrap()[1].clone())];
    for name in ["C2", "C3", "C2xC2", "S3"] {
        let g = group(name);
        let omega = gcrossed::omega::trivial(&g);
        cases.push((name, g, omega));
    }
    for (name, g, omega) in cases {
        let expected = brute_subcat_count(&g, &omega);
        let data = Arc::new(TwistedGroupData::new(&g, omega).unwrap());
        assert_eq!(enumerate_subcats(&data).unwrap().len(), expected, "{name}");
    }
}
