//! Crossed braidings on `Vec(G, omega)` and `Rep(G)` as subcategories of the
//! center satisfying three conditions: centralizing the canonical copy of the
//! grading group's representations, the dimension count, and transversality.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::Serialize;

use crate::center::TwistedGroupData;
use crate::error::{Error, Result};
use crate::exact::{solve_rows, Congruences};
use crate::group::{annihilator, dual_group, FiniteGroup, GroupHom, Subgroup};
use crate::subcat::{bicharacter_modulus, contains, fpdim, invariant_bicharacters, OmegaBicharacter, SubcatData, SubcatRecord};

/// Ceiling on bicharacter candidates per enumeration.
const CANDIDATE_BUDGET: u128 = 2_000_000;

/// The category being equipped with a crossed braiding.
#[derive(Debug, Clone)]
pub enum Ambient {
    /// `Vec(G, omega)`.
    Pointed(Arc<TwistedGroupData>),
    /// `Rep(G)`, whose center is `Z(Vec(G))`.
    Rep(Arc<TwistedGroupData>),
}

impl Ambient {
    pub fn pointed(data: Arc<TwistedGroupData>) -> Self {
        Ambient::Pointed(data)
    }

    pub fn rep(group: &FiniteGroup) -> Self {
        Ambient::Rep(Arc::new(TwistedGroupData::trivial(group)))
    }

    pub fn data(&self) -> &Arc<TwistedGroupData> {
        match self {
            Ambient::Pointed(d) | Ambient::Rep(d) => d,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.data().group()
    }

    /// FPdim of the ambient fusion category.
    pub fn fpdim(&self) -> usize {
        self.group().order()
    }
}

/// A faithful grading of the ambient category.
#[derive(Debug, Clone)]
pub enum GradingSpec {
    /// `pi: G -> H` surjective, with the minimal-id section.
    Pointed { projection: GroupHom, section: Vec<usize> },
    /// `H <= Z(G)`; the grading group is `dual(Z(G)) / H^perp`.
    Rep { h: Subgroup, grading_group: FiniteGroup },
}

impl GradingSpec {
    pub fn pointed(projection: GroupHom) -> Result<Self> {
        let section = projection.minimal_section()?;
        Ok(GradingSpec::Pointed { projection, section })
    }

    /// `pi = id`.
    pub fn full(group: &FiniteGroup) -> Self {
        Self::pointed(GroupHom::identity(group)).expect("identity is surjective")
    }

    /// `pi: G -> G/K`.
    pub fn quotient_by(group: &FiniteGroup, kernel: &Subgroup) -> Result<Self> {
        Self::pointed(group.quotient(kernel)?.projection)
    }

    pub fn rep(group: &FiniteGroup, h: Subgroup) -> Result<Self> {
        let z = group.center();
        if !h.is_subset_of(&z) {
            return Err(Error::NotCentral(h.elements().to_vec()));
        }
        let zg = group.subgroup_as_group(&z);
        let dual = dual_group(&zg)?;
        let h_local = zg.generate(&h.elements().iter().map(|&x| z.index_of(x).unwrap()).collect::<Vec<_>>());
        let perp = annihilator(&dual, &h_local);
        let grading_group = dual.group.quotient(&perp)?.group;
        Ok(GradingSpec::Rep { h, grading_group })
    }

    /// Order of the grading group.
    pub fn grading_order(&self) -> usize {
        match self {
            GradingSpec::Pointed { projection, .. } => projection.target().order(),
            GradingSpec::Rep { grading_group, .. } => grading_group.order(),
        }
    }

    pub fn to_record(&self) -> GradingRecord {
        match self {
            GradingSpec::Pointed { projection, section } => GradingRecord {
                kind: "quotient",
                kernel: projection.kernel().elements().to_vec(),
                grading_order: projection.target().order(),
                section: Some(section.clone()),
            },
            GradingSpec::Rep { h, grading_group } => GradingRecord {
                kind: "center-subgroup",
                kernel: h.elements().to_vec(),
                grading_order: grading_group.order(),
                section: None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingRecord {
    pub kind: &'static str,
    /// `ker(pi)` for pointed gradings, `H` for gradings of `Rep(G)`.
    pub kernel: Vec<usize>,
    pub grading_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<Vec<usize>>,
}

/// The three conditions, each with a short explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremChecks {
    pub centralizes: bool,
    pub fpdim: bool,
    pub transverse: bool,
    pub notes: Vec<String>,
}

impl TheoremChecks {
    pub fn all(&self) -> bool {
        self.centralizes && self.fpdim && self.transverse
    }
}

#[derive(Debug, Clone)]
pub struct CrossedBraidingCertificate {
    pub grading: GradingSpec,
    pub witness: SubcatData,
    pub checks: TheoremChecks,
}

impl CrossedBraidingCertificate {
    pub fn to_record(&self, ambient: &str) -> CertificateRecord {
        CertificateRecord {
            ambient: ambient.to_string(),
            grading: self.grading.to_record(),
            witness: self.witness.to_record(),
            checks: [
                ("centralizes", self.checks.centralizes),
                ("fpdim", self.checks.fpdim),
                ("transverse", self.checks.transverse),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub ambient: String,
    pub grading: GradingRecord,
    pub witness: SubcatRecord,
    pub checks: IndexMap<String, bool>,
}

pub fn check_theorem_conditions(ambient: &Ambient, grading: &GradingSpec, s: &SubcatData) -> Result<TheoremChecks> {
    let data = ambient.data();
    let g = data.group();
    if s.parent().group() != g || s.parent().omega() != data.omega() {
        return Err(Error::ParentMismatch);
    }
    let mut notes = Vec::new();
    let dim_ok = grading.grading_order() * fpdim(s) == ambient.fpdim();
    if !dim_ok {
        notes.push(format!(
            "|grading group| * FPdim = {} * {} != {}",
            grading.grading_order(),
            fpdim(s),
            ambient.fpdim()
        ));
    }
    match (ambient, grading) {
        (Ambient::Pointed(_), GradingSpec::Pointed { projection, .. }) => {
            if projection.source() != g {
                return Err(Error::InvalidGrading("projection does not start at G".into()));
            }
            let kernel = projection.kernel();
            let canonical = SubcatData::with_trivial_b(data.clone(), kernel, g.trivial_subgroup())
                .map_err(|v| Error::InvalidGrading(v.to_string()))?;
            let centralizes = contains(&canonical, s)?;
            if !centralizes {
                notes.push("L is not contained in ker(pi)".into());
            }
            let transverse = s.m() == &g.whole();
            if !transverse {
                notes.push("M != G".into());
            }
            Ok(TheoremChecks {
                centralizes,
                fpdim: dim_ok,
                transverse,
                notes,
            })
        }
        (Ambient::Rep(_), GradingSpec::Rep { h, .. }) => {
            if !data.is_trivial() {
                return Err(Error::InvalidGrading("Rep(G) has trivial associator".into()));
            }
            if !h.is_subset_of(&g.center()) {
                return Err(Error::NotCentral(h.elements().to_vec()));
            }
            let canonical = SubcatData::with_trivial_b(data.clone(), g.whole(), h.clone())
                .map_err(|v| Error::InvalidGrading(v.to_string()))?;
            let centralizes = contains(&canonical, s)?;
            if !centralizes {
                notes.push("not contained in S(G, H, 1)".into());
            }
            let b = s.b();
            let transverse = s
                .l()
                .elements()
                .iter()
                .skip(1)
                .all(|&x| s.m().elements().iter().any(|&y| b.exp(x, y) != 0));
            if !transverse {
                notes.push("B-hat: L -> dual(M) is not injective".into());
            }
            if s.l().order() * h.order() != s.m().order() {
                notes.push("|L| != [M : H]".into());
            }
            Ok(TheoremChecks {
                centralizes,
                fpdim: dim_ok,
                transverse,
                notes,
            })
        }
        _ => Err(Error::InvalidGrading("grading kind does not match the ambient category".into())),
    }
}

/// Crossed braidings on `Vec(G, omega)` for the grading `pi`, one per
/// `G`-invariant `omega`-bicharacter on `ker(pi) x G`.
///
/// Empty when `ker(pi)` is not central.
pub fn enumerate_pointed(data: &Arc<TwistedGroupData>, projection: &GroupHom) -> Result<Vec<CrossedBraidingCertificate>> {
    let g = data.group();
    if projection.source() != g {
        return Err(Error::InvalidGrading("projection does not start at G".into()));
    }
    if !projection.is_surjective() {
        return Err(Error::NotSurjective {
            image: projection.image().order(),
            target: projection.target().order(),
        });
    }
    let kernel = projection.kernel();
    if !kernel.is_subset_of(&g.center()) {
        return Ok(Vec::new());
    }
    let grading = GradingSpec::pointed(projection.clone())?;
    let ambient = Ambient::Pointed(data.clone());
    invariant_bicharacters(data, &kernel, &g.whole(), CANDIDATE_BUDGET)?
        .into_iter()
        .map(|b| {
            let witness = SubcatData::new(data.clone(), b).map_err(|v| Error::NotACocycle(v.to_string()))?;
            let checks = check_theorem_conditions(&ambient, &grading, &witness)?;
            Ok(CrossedBraidingCertificate {
                grading: grading.clone(),
                witness,
                checks,
            })
        })
        .collect()
}

/// Whether `ker(pi)` is central, the necessary condition for any crossed braiding.
pub fn kernel_is_central(projection: &GroupHom) -> bool {
    projection.kernel().is_subset_of(&projection.source().center())
}

/// Crossed braidings on `Rep(G)` graded by `dual(Z(G)) / H^perp`.
///
/// Runs over `M` normal with `H <= M` and `M/H` abelian, `L` normal abelian
/// commuting with `M` with `|L| = [M : H]`, and nondegenerate `G`-invariant
/// bicharacters `L x M/H -> C^x`, solved directly on the quotient.
pub fn enumerate_rep(group: &FiniteGroup, h: &Subgroup) -> Result<Vec<CrossedBraidingCertificate>> {
    let grading = GradingSpec::rep(group, h.clone())?;
    let ambient = Ambient::rep(group);
    let data = ambient.data().clone();
    let k = bicharacter_modulus(&data);
    let normals = group.normal_subgroups()?;
    let mut out = Vec::new();
    for m in normals.iter().filter(|m| h.is_subset_of(m)) {
        let mg = group.subgroup_as_group(m);
        let commutator = mg.commutator_subgroup();
        if !commutator.elements().iter().all(|&i| h.contains(m.elements()[i])) {
            continue;
        }
        // cosets mH by their minimal element
        let coset = |x: usize| h.elements().iter().map(|&y| group.mul(x, y)).min().unwrap();
        let mut reps: Vec<usize> = m.elements().iter().map(|&x| coset(x)).collect();
        reps.sort_unstable();
        reps.dedup();
        let q = reps.len();
        let qpos = |x: usize| reps.binary_search(&coset(x)).unwrap();
        for l in normals.iter() {
            if l.order() != q || !group.elementwise_commute(l, m) {
                continue;
            }
            let lg = group.subgroup_as_group(l);
            if !lg.is_abelian() {
                continue;
            }
            let nl = l.order();
            let var = |x: usize, y: usize| l.index_of(x).unwrap() * q + qpos(y);
            let mut rows: Vec<Vec<i64>> = Vec::new();
            let mut eq = |terms: &[(usize, i64)]| {
                let mut row = vec![0i64; nl * q];
                for &(v, c) in terms {
                    row[v] += c;
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            };
            for &x in l.elements() {
                for &a in &reps {
                    for &b in &reps {
                        eq(&[(var(x, group.mul(a, b)), 1), (var(x, a), -1), (var(x, b), -1)]);
                    }
                }
            }
            for &x in l.elements() {
                for &y in l.elements() {
                    for &a in &reps {
                        eq(&[(var(group.mul(x, y), a), 1), (var(x, a), -1), (var(y, a), -1)]);
                    }
                }
            }
            for gg in group.elements() {
                let gi = group.inv(gg);
                for &x in l.elements() {
                    for &a in &reps {
                        eq(&[(var(group.conj(gi, x), a), 1), (var(x, group.conj(gg, a)), -1)]);
                    }
                }
            }
            rows.sort();
            rows.dedup();
            let nvars = nl * q;
            let zeros = vec![0; rows.len()];
            let solutions = match solve_rows(rows, nvars, &zeros, k) {
                Congruences::Infeasible => continue,
                Congruences::Solutions(s) => s,
            };
            if solutions.count() > CANDIDATE_BUDGET {
                return Err(Error::BudgetExceeded {
                    needed: solutions.count(),
                    budget: CANDIDATE_BUDGET,
                });
            }
            let mut tables: Vec<Vec<i64>> = solutions
                .iter()
                .filter(|x| (1..nl).all(|i| (0..q).any(|j| x[i * q + j] != 0)))
                .map(|x| {
                    l.elements()
                        .iter()
                        .flat_map(|&lx| m.elements().iter().map(move |&my| (lx, my)))
                        .map(|(lx, my)| x[var(lx, my)])
                        .collect()
                })
                .collect();
            tables.sort();
            for table in tables {
                let b = OmegaBicharacter::new(l.clone(), m.clone(), k, table)?;
                let witness = SubcatData::new(data.clone(), b).map_err(|v| Error::NotACocycle(v.to_string()))?;
                let checks = check_theorem_conditions(&ambient, &grading, &witness)?;
                out.push(CrossedBraidingCertificate {
                    grading: grading.clone(),
                    witness,
                    checks,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        let key = |c: &CrossedBraidingCertificate| {
            (
                c.witness.l().order(),
                c.witness.m().order(),
                c.witness.l().elements().to_vec(),
                c.witness.m().elements().to_vec(),
                c.witness.b().table().to_vec(),
            )
        };
        key(a).cmp(&key(b))
    });
    Ok(out)
}

/// One grading of `Rep(G)` per subgroup `H <= Z(G)`.
pub fn gradings_of_rep(group: &FiniteGroup) -> Result<Vec<GradingSpec>> {
    let z = group.center();
    let zg = group.subgroup_as_group(&z);
    zg.all_subgroups()?
        .into_iter()
        .map(|s| {
            let ids: Vec<usize> = s.elements().iter().map(|&i| z.elements()[i]).collect();
            GradingSpec::rep(group, group.subgroup(&ids)?)
        })
        .collect()
}
