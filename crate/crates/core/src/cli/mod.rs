//! Command-line front end. [`run`] takes the full argument vector and returns
//! the exit code with the report text, so the binary is a thin shim.
//!
//! Exit codes: `0` success, `1` malformed input, `2` domain rejection.

mod selftest;
mod table;

use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::center::{invertibles_of_center, simple_census, TwistedGroupData};
use crate::cohomology::{cohomology_group_with_budget, CocycleFile, CoefficientModule, Cochain, CohomologyGroup, DEFAULT_BUDGET};
use crate::crossed::{enumerate_pointed, enumerate_rep, gradings_of_rep, kernel_is_central, GradingSpec};
use crate::error::{Error, Result};
use crate::group::{abelian_increment, build_group, FiniteGroup, GroupHom, GroupSpec, Subgroup};
use crate::obstruction::{fibered_enrichment_extends, fully_faithful_obstruction, zesting_lift_exists};
use crate::omega::{stored_classes, unity_classes, BATTERY};
use crate::subcat::{enumerate_subcats_with_budget, DEFAULT_CANDIDATE_BUDGET};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "gcrossed", version, about = "Crossed braidings and center subcategories over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Overrides the work budget of the chosen computation.
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Builtin name, path to a group JSON file, or inline JSON.
    #[arg(long)]
    group: String,
}

#[derive(Debug, Args)]
struct OmegaArg {
    /// `trivial`, `repr:k` or a path to a cocycle file.
    #[arg(long, default_value = "trivial")]
    omega: String,
}

#[derive(Debug, Args)]
struct ModuleArg {
    /// Coefficients `Z/N` with trivial action.
    #[arg(long, conflicts_with = "module")]
    modulus: Option<usize>,
    /// Coefficient group as builtin, path or inline JSON.
    #[arg(long)]
    module: Option<String>,
    /// `action[g][a]` as a path or inline JSON matrix.
    #[arg(long)]
    action: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Basic data of a group.
    Group(GroupArg),
    /// All subgroups with normality and centrality flags.
    Subgroups(GroupArg),
    /// `H^n(G, A)` as a list of cyclic orders.
    Cohomology {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        module: ModuleArg,
        /// Include cocycle representatives of the generators.
        #[arg(long)]
        representatives: bool,
    },
    /// Simple objects of the twisted Drinfeld center.
    CenterCensus {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        omega: OmegaArg,
    },
    /// Every fusion subcategory `S(L, M, B)` of the center.
    Subcats {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        omega: OmegaArg,
    },
    /// Crossed braidings on `Vec(G, omega)`.
    CrossedPointed {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        omega: OmegaArg,
        /// `full` or `quotient-by:"ids"` (the kernel).
        #[arg(long, default_value = "full")]
        grading: String,
    },
    /// Crossed braidings on `Rep(G)`.
    CrossedRep {
        #[command(flatten)]
        group: GroupArg,
        /// `full`, `trivial` or comma-separated ids of `H <= Z(G)`.
        #[arg(long, default_value = "trivial")]
        center_subgroup: String,
    },
    /// Faithful gradings of `Rep(G)`.
    GradingsRep(GroupArg),
    /// Whether a fibered enrichment extends along `N -> E -> E/N`.
    Fibered {
        #[arg(long)]
        extension: String,
        /// Comma-separated ids of `N` in `E`.
        #[arg(long)]
        normal: String,
    },
    /// Whether zesting by a 2-cocycle in `dual(N) x Z(N)` lifts.
    Zesting {
        /// The grading group `G`.
        #[command(flatten)]
        group: GroupArg,
        /// The group `N`.
        #[arg(long)]
        n_group: String,
        /// A 2-cocycle file; every class of `H^2` is tried when omitted.
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// The fully faithful lifting obstruction in `H^2(G, A)`.
    Obstruction {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        module: ModuleArg,
        /// A 2-cocycle file; every class of `H^2` is tried when omitted.
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Runs the invariant suite on the builtin battery.
    Selftest {
        /// Restrict to one group.
        #[arg(long)]
        group: Option<String>,
        /// Unvalidated cocycle file replacing the stored ones.
        #[arg(long)]
        omega: Option<String>,
    },
}

/// Outcome of a verb that may reject its input on mathematical grounds.
struct Report {
    value: Value,
    rejected: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, rejected: false }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("records serialize")
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let text = render(&report.value, cli.format);
            (if report.rejected { 2 } else { 0 }, text)
        }
        Err(e) => {
            let value = json!({ "error": error_kind(&e), "message": e.to_string() });
            (exit_code(&e), render(&value, cli.format))
        }
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Table => table::render(value),
    }
}

/// `1` for malformed input, `2` for well-formed input the mathematics rejects.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io { .. }
        | Error::NotAGroup(_)
        | Error::UnknownBuiltin(_)
        | Error::InvalidElement { .. }
        | Error::NotASubgroup(_)
        | Error::Dimension(_)
        | Error::InvalidModule(_)
        | Error::NotAHomomorphism(_) => 1,
        _ => 2,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotAGroup(_) => "not-a-group",
        Error::UnknownBuiltin(_) => "unknown-builtin",
        Error::InvalidElement { .. } => "invalid-element",
        Error::GroupTooLarge { .. } => "group-too-large",
        Error::NotASubgroup(_) => "not-a-subgroup",
        Error::NotNormal(_) => "not-normal",
        Error::NotAbelian(_) => "not-abelian",
        Error::NotCentral(_) => "not-central",
        Error::NotSurjective { .. } => "not-surjective",
        Error::NotAHomomorphism(_) => "not-a-homomorphism",
        Error::DegreeTooHigh(_) => "degree-too-high",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::NonTrivialAction => "nontrivial-action",
        Error::NotACocycle(_) => "not-a-cocycle",
        Error::BetaNotCocycle { .. } => "beta-not-cocycle",
        Error::ParentMismatch => "parent-mismatch",
        Error::InvalidGrading(_) => "invalid-grading",
        Error::InvalidModule(_) => "invalid-module",
        Error::Overflow(_) => "overflow",
        Error::Dimension(_) => "dimension",
        Error::Parse(_) => "parse",
        Error::Io { .. } => "io",
    }
}

fn read_text(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_string(),
        message: e.to_string(),
    })
}

/// Inline JSON, a readable file, or the argument itself.
fn json_or_file(arg: &str) -> Result<Option<String>> {
    let t = arg.trim();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(Some(t.to_string()))
    } else if Path::new(t).is_file() {
        read_text(t).map(Some)
    } else {
        Ok(None)
    }
}

/// A group argument and the builtin name it refers to, if any.
pub(crate) fn load_group(arg: &str) -> Result<(FiniteGroup, Option<String>)> {
    match json_or_file(arg)? {
        Some(text) => {
            let spec: GroupSpec =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("group `{arg}`: {e}")))?;
            let name = match &spec {
                GroupSpec::Builtin { builtin } => Some(builtin.clone()),
                _ => None,
            };
            Ok((build_group(&spec)?, name))
        }
        None => Ok((build_group(&GroupSpec::builtin(arg.trim()))?, Some(arg.trim().to_string()))),
    }
}

pub(crate) fn parse_ids(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_matches(|c| c == '"' || c == '\'' || c == '[' || c == ']');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad element id `{}` in `{s}`", x.trim())))
        })
        .collect()
}

fn load_subgroup(g: &FiniteGroup, ids: &str) -> Result<Subgroup> {
    let mut ids = parse_ids(ids)?;
    if !ids.contains(&0) {
        ids.push(0);
    }
    g.subgroup(&ids)
}

pub(crate) fn load_cocycle_file(arg: &str) -> Result<CocycleFile> {
    match json_or_file(arg)? {
        Some(text) => CocycleFile::parse(&text),
        None => Err(Error::Io {
            path: arg.to_string(),
            message: "no such file".into(),
        }),
    }
}

/// Selects the 3-cocycle named by `--omega`.
fn load_omega(group: &FiniteGroup, name: Option<&str>, arg: &str) -> Result<(TwistedGroupData, String)> {
    let arg = arg.trim();
    if arg == "trivial" {
        return Ok((TwistedGroupData::trivial(group), "trivial".into()));
    }
    if let Some(k) = arg.strip_prefix("repr:") {
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad class index in `{arg}`")))?;
        let classes = match name {
            Some(n) if BATTERY.contains(&n) => stored_classes(n, group)?,
            _ => unity_classes(group)?,
        };
        let count = classes.len();
        let omega = classes
            .into_iter()
            .nth(k)
            .ok_or_else(|| Error::Parse(format!("class index {k} out of range; H^3 has {count} classes")))?;
        return Ok((TwistedGroupData::new(group, omega)?, arg.to_string()));
    }
    let omega = load_cocycle_file(arg)?.to_cochain(group)?;
    Ok((TwistedGroupData::new(group, omega)?, arg.to_string()))
}

fn load_module(group: &FiniteGroup, m: &ModuleArg) -> Result<CoefficientModule> {
    let base = match (m.modulus, &m.module) {
        (Some(n), None) if n > 0 => CoefficientModule::cyclic(n),
        (None, Some(spec)) => CoefficientModule::from_group(load_group(spec)?.0)?,
        _ => return Err(Error::Parse("give exactly one of --modulus N (N > 0) or --module".into())),
    };
    match &m.action {
        None => Ok(base),
        Some(a) => {
            let text = json_or_file(a)?.ok_or_else(|| Error::Parse(format!("action `{a}` is neither JSON nor a file")))?;
            let action: Vec<Vec<usize>> =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("action matrix: {e}")))?;
            base.with_action(group, action)
        }
    }
}

fn group_header(g: &FiniteGroup) -> Value {
    json!({ "name": g.display_name(), "order": g.order() })
}

/// Every class of `H^2(G, A)` as a representative, walked in mixed-radix order.
fn all_classes(h: &CohomologyGroup, group: &FiniteGroup, module: &CoefficientModule) -> Result<Vec<(Vec<usize>, Cochain)>> {
    let radix: Vec<usize> = h.orders.iter().map(|&o| o as usize).collect();
    let mut digits = vec![0usize; radix.len()];
    let mut out = Vec::new();
    loop {
        let mut c = Cochain::zero(group, module, h.degree);
        for (rep, &k) in h.representatives.iter().zip(&digits) {
            c = c.add(&rep.scale(k))?;
        }
        out.push((digits.clone(), c));
        if !abelian_increment(&mut digits, &radix) {
            return Ok(out);
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Group(a) => {
            let (g, _) = load_group(&a.group)?;
            Ok(Report::ok(json!({
                "name": g.display_name(),
                "order": g.order(),
                "exponent": g.exponent(),
                "abelian": g.is_abelian(),
                "center": g.center().elements(),
                "conjugacy_classes": g.conjugacy_classes().iter().map(|c| c.elements.clone()).collect::<Vec<_>>(),
                "inverses": g.elements().map(|x| g.inv(x)).collect::<Vec<_>>(),
                "table": g.table_rows(),
            })))
        }
        Command::Subgroups(a) => {
            let (g, _) = load_group(&a.group)?;
            let z = g.center();
            let subs: Vec<Value> = g
                .all_subgroups()?
                .iter()
                .map(|s| {
                    json!({
                        "order": s.order(),
                        "elements": s.elements(),
                        "normal": g.is_normal(s),
                        "central": s.is_subset_of(&z),
                    })
                })
                .collect();
            Ok(Report::ok(json!({ "group": group_header(&g), "count": subs.len(), "subgroups": subs })))
        }
        Command::Cohomology {
            group,
            degree,
            module,
            representatives,
        } => {
            let (g, _) = load_group(&group.group)?;
            let m = load_module(&g, module)?;
            let h = cohomology_group_with_budget(&g, *degree, &m, cli.budget.unwrap_or(DEFAULT_BUDGET))?;
            let mut out = json!({
                "group": group_header(&g),
                "degree": h.degree,
                "module_order": m.order(),
                "trivial_action": m.is_trivial_action(),
                "order": h.order(),
                "orders": h.orders,
                "invariant_factors": h.invariant_factors,
            });
            if *representatives {
                out["representatives"] = to_value(&h.representatives.iter().map(CocycleFile::from_cochain).collect::<Vec<_>>());
            }
            Ok(Report::ok(out))
        }
        Command::CenterCensus { group, omega } => {
            let (g, name) = load_group(&group.group)?;
            let (data, label) = load_omega(&g, name.as_deref(), &omega.omega)?;
            let census = simple_census(&data)?;
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "omega": label,
                "simple_count": census.simple_count,
                "fpdim_square_sum": census.fpdim_square_sum,
                "labels": to_value(&census.labels),
            })))
        }
        Command::Subcats { group, omega } => {
            let (g, name) = load_group(&group.group)?;
            let (data, label) = load_omega(&g, name.as_deref(), &omega.omega)?;
            let subs = enumerate_subcats_with_budget(&Arc::new(data), cli.budget.unwrap_or(DEFAULT_CANDIDATE_BUDGET))?;
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "omega": label,
                "count": subs.len(),
                "subcategories": subs.iter().map(|s| to_value(&s.to_record())).collect::<Vec<_>>(),
            })))
        }
        Command::CrossedPointed { group, omega, grading } => {
            let (g, name) = load_group(&group.group)?;
            let (data, label) = load_omega(&g, name.as_deref(), &omega.omega)?;
            let projection = parse_grading(&g, grading)?;
            let header = json!({
                "group": group_header(&g),
                "omega": label,
                "grading": to_value(&GradingSpec::pointed(projection.clone())?.to_record()),
            });
            if !kernel_is_central(&projection) {
                let mut v = header;
                v["count"] = json!(0);
                v["certificates"] = json!([]);
                v["reason"] = json!("kernel-not-central");
                v["kernel"] = json!(projection.kernel().elements());
                v["center"] = json!(g.center().elements());
                return Ok(Report { value: v, rejected: true });
            }
            let certs = enumerate_pointed(&Arc::new(data), &projection)?;
            let mut v = header;
            v["count"] = json!(certs.len());
            v["certificates"] = certs.iter().map(|c| to_value(&c.to_record("pointed"))).collect();
            Ok(Report::ok(v))
        }
        Command::CrossedRep { group, center_subgroup } => {
            let (g, _) = load_group(&group.group)?;
            let h = match center_subgroup.trim() {
                "full" => g.center(),
                "trivial" => g.trivial_subgroup(),
                ids => load_subgroup(&g, ids)?,
            };
            let certs = enumerate_rep(&g, &h)?;
            let grading = GradingSpec::rep(&g, h)?;
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "grading": to_value(&grading.to_record()),
                "count": certs.len(),
                "certificates": certs.iter().map(|c| to_value(&c.to_record("rep"))).collect::<Vec<_>>(),
            })))
        }
        Command::GradingsRep(a) => {
            let (g, _) = load_group(&a.group)?;
            let gradings = gradings_of_rep(&g)?;
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "center": g.center().elements(),
                "count": gradings.len(),
                "gradings": gradings.iter().map(|x| to_value(&x.to_record())).collect::<Vec<_>>(),
            })))
        }
        Command::Fibered { extension, normal } => {
            let (e, _) = load_group(extension)?;
            let n = load_subgroup(&e, normal)?;
            let report = fibered_enrichment_extends(&e, &n)?;
            let mut v = to_value(&report);
            v["extension"] = group_header(&e);
            v["normal"] = json!(n.elements());
            Ok(Report::ok(v))
        }
        Command::Zesting { group, n_group, cocycle } => {
            let (g, _) = load_group(&group.group)?;
            let (n, _) = load_group(n_group)?;
            let inv = invertibles_of_center(&n)?;
            let module = CoefficientModule::from_group(inv.product.clone())?;
            let classes = match cocycle {
                Some(path) => vec![(Vec::new(), load_cocycle_file(path)?.to_cochain(&g)?)],
                None => {
                    let h = cohomology_group_with_budget(&g, 2, &module, cli.budget.unwrap_or(DEFAULT_BUDGET))?;
                    all_classes(&h, &g, &module)?
                }
            };
            let mut rows = Vec::new();
            for (digits, c) in &classes {
                let c = if c.module() == &module {
                    c.clone()
                } else {
                    Cochain::from_values(&g, &module, 2, c.values().to_vec())?
                };
                rows.push(json!({ "class": digits, "lifts": zesting_lift_exists(&inv, &c)? }));
            }
            let all = rows.iter().all(|r| r["lifts"] == json!(true));
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "n_group": group_header(&n),
                "characters": inv.characters.order(),
                "center_order": inv.center_group.order(),
                "all_lift": all,
                "classes": rows,
            })))
        }
        Command::Obstruction { group, module, cocycle } => {
            let (g, _) = load_group(&group.group)?;
            let m = load_module(&g, module)?;
            let classes = match cocycle {
                Some(path) => vec![(Vec::new(), load_cocycle_file(path)?.to_cochain(&g)?)],
                None => {
                    let h = cohomology_group_with_budget(&g, 2, &m, cli.budget.unwrap_or(DEFAULT_BUDGET))?;
                    all_classes(&h, &g, &m)?
                }
            };
            let rows = classes
                .iter()
                .map(|(digits, c)| {
                    let r = fully_faithful_obstruction(c)?;
                    Ok(json!({ "class": digits, "vanishes": r.vanishes, "splitting_count": r.splitting_count }))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Report::ok(json!({
                "group": group_header(&g),
                "module_order": m.order(),
                "classes": rows,
            })))
        }
        Command::Selftest { group, omega } => {
            let report = selftest::run(cli.seed, group.as_deref(), omega.as_deref())?;
            let rejected = report.failed > 0;
            Ok(Report {
                value: to_value(&report),
                rejected,
            })
        }
    }
}

fn parse_grading(g: &FiniteGroup, arg: &str) -> Result<GroupHom> {
    let arg = arg.trim();
    if arg == "full" {
        return Ok(GroupHom::identity(g));
    }
    let ids = arg
        .strip_prefix("quotient-by:")
        .ok_or_else(|| Error::Parse(format!("grading `{arg}` is neither `full` nor `quotient-by:ids`")))?;
    let k = load_subgroup(g, ids)?;
    Ok(g.quotient(&k)?.projection)
}
