//! End-to-end runs of the `gcrossed` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gcrossed"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gcrossed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn crossed_pointed_s3_full_grading_is_unique() {
    let out = run(&["crossed-pointed", "--group", "S3", "--omega", "trivial", "--grading", "full"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 1);
    let cert = &v["certificates"][0];
    assert_eq!(cert["ambient"], "pointed");
    assert_eq!(cert["witness"]["L"], serde_json::json!([0]));
    assert_eq!(cert["witness"]["fpdim"], 1);
    assert_eq!(cert["checks"], serde_json::json!({"centralizes": true, "fpdim": true, "transverse": true}));
}

/// Triples `(L, M, B)` for `Rep(C4)` graded by all of `C4`, by trying every table.
fn brute_rep_c4_full() -> usize {
    let subgroups: [&[usize]; 3] = [&[0], &[0, 2], &[0, 1, 2, 3]];
    let mut count = 0;
    for l in subgroups {
        for m in subgroups {
            // H = C4 must lie in M, and |H| |L| [G : M] = |G|
            if m.len() != 4 || 4 * l.len() * (4 / m.len()) != 4 {
                continue;
            }
            let cells = l.len() * m.len();
            for code in 0..4usize.pow(cells as u32) {
                let t: Vec<usize> = (0..cells).map(|i| code / 4usize.pow(i as u32) % 4).collect();
                let b = |x: usize, y: usize| {
                    t[l.iter().position(|&v| v == x).unwrap() * m.len() + m.iter().position(|&v| v == y).unwrap()]
                };
                let bilinear = l.iter().all(|&x| {
                    m.iter().all(|&y| {
                        m.iter().all(|&z| b(x, (y + z) % 4) == (b(x, y) + b(x, z)) % 4)
                            && l.iter().all(|&w| b((x + w) % 4, y) == (b(x, y) + b(w, y)) % 4)
                    })
                });
                let kills_h = l.iter().all(|&x| m.iter().all(|&y| b(x, y) == 0));
                if bilinear && kills_h {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn crossed_rep_c4_full_matches_brute_force() {
    let out = run(&["crossed-rep", "--group", "C4", "--center-subgroup", "full"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], brute_rep_c4_full() as u64);
    assert_eq!(v["grading"]["grading_order"], 4);
}

#[test]
fn fibered_c4_does_not_extend() {
    let out = run(&["fibered", "--extension", "C4", "--normal", "0,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["extends"], false);
    assert!(v["reason"].as_str().unwrap().contains("nonzero"));
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["subcats", "--group", "D8", "--omega", "repr:3"];
    let a = run(&args);
    let b = bin().args(args).env("RAYON_NUM_THREADS", "1").output().unwrap();
    let c = bin().args(args).env("RAYON_NUM_THREADS", "7").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn selftest_passes_and_ignores_the_seed() {
    let verdicts = |seed: &str| {
        let out = run(&["selftest", "--seed", seed]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        let v = json(&out);
        assert_eq!(v["failed"], 0);
        v["properties"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p["group"].to_string(), p["omega"].to_string(), p["property"].to_string(), p["pass"].as_bool().unwrap()))
            .collect::<Vec<_>>()
    };
    let first = verdicts("1");
    assert!(first.len() > 200);
    assert_eq!(first, verdicts("987654321"));
}

#[test]
fn selftest_names_the_broken_beta_property() {
    let path = scratch("bad-omega.json", r#"{"degree": 3, "modulus": 4, "entries": {"1,2,3": 1}, "normalized": true}"#);
    let out = run(&["selftest", "--group", "C4", "--omega", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    let failed: Vec<&str> = v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["pass"] == false)
        .map(|p| p["property"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"beta-cocycle"), "{failed:?}");
}

#[test]
fn group_files_in_every_schema() {
    let table = scratch("c3.json", r#"{"name": "three", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#);
    let v = json(&run(&["group", "--group", table.to_str().unwrap()]));
    assert_eq!((v["name"].as_str(), v["order"].as_u64()), (Some("three"), Some(3)));
    let perms = scratch("s3.json", r#"{"generators": ["(0 1 2)", "(0 1)"], "degree": 3}"#);
    let v = json(&run(&["subgroups", "--group", perms.to_str().unwrap()]));
    assert_eq!(v["count"], 6);
    let v = json(&run(&["group", "--group", r#"{"builtin": "Q8"}"#]));
    assert_eq!(v["center"], serde_json::json!([0, 1]));
}

#[test]
fn omega_from_a_cocycle_file() {
    let path = scratch("c2-omega.json", r#"{"degree": 3, "modulus": 2, "entries": {"1,1,1": 1}, "normalized": true}"#);
    let out = run(&["center-census", "--group", "C2", "--omega", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["simple_count"], 4);
    let out = run(&["subcats", "--group", "C2", "--omega", path.to_str().unwrap()]);
    assert_eq!(json(&out)["count"], 5);
    let broken = scratch("c2-broken.json", r#"{"degree": 3, "modulus": 2, "entries": {"1,1,0": 1}}"#);
    let out = run(&["subcats", "--group", "C2", "--omega", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "not-a-cocycle");
}

#[test]
fn cohomology_with_module_and_action() {
    let v = json(&run(&["cohomology", "--group", "C2", "--degree", "2", "--modulus", "2", "--representatives"]));
    assert_eq!(v["orders"], serde_json::json!([2]));
    assert_eq!(v["representatives"].as_array().unwrap().len(), 1);
    let v = json(&run(&["cohomology", "--group", "C2", "--degree", "1", "--modulus", "3", "--action", "[[0,1,2],[0,2,1]]"]));
    assert_eq!(v["order"], 1);
    let v = json(&run(&["cohomology", "--group", "C2xC2", "--degree", "2", "--module", "C2"]));
    assert_eq!(v["order"], 8);
}

#[test]
fn malformed_input_exits_one() {
    for args in [
        vec!["group", "--group", "X9"],
        vec!["fibered", "--extension", "C4", "--normal", "0,1"],
        vec!["fibered", "--extension", "C4", "--normal", "zero"],
        vec!["crossed-pointed", "--group", "S3", "--grading", "sideways"],
        vec!["cohomology", "--group", "C2", "--degree", "1"],
        vec!["nonsense"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn domain_rejections_exit_two() {
    for (args, kind) in [
        (vec!["crossed-rep", "--group", "S3", "--center-subgroup", "0,3,4"], "not-central"),
        (vec!["fibered", "--extension", "S3", "--normal", "0,1"], "not-normal"),
        (vec!["cohomology", "--group", "C2", "--degree", "4", "--modulus", "2"], "degree-too-high"),
        (vec!["subcats", "--group", "D8", "--budget", "3"], "budget-exceeded"),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(json(&out)["error"], kind, "{args:?}");
    }
}

#[test]
fn table_format_renders() {
    let out = run(&["gradings-rep", "--group", "Q8", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("grading_order"));
    assert!(text.lines().any(|l| l.trim_start().starts_with("center-subgroup")));
}

#[test]
fn zesting_and_obstruction_verbs() {
    let v = json(&run(&["zesting", "--group", "C2", "--n-group", "S3"]));
    assert_eq!(v["all_lift"], true);
    let v = json(&run(&["zesting", "--group", "C2", "--n-group", "C2"]));
    assert_eq!(v["all_lift"], false);
    let v = json(&run(&["obstruction", "--group", "C2", "--modulus", "2"]));
    let rows = v["classes"].as_array().unwrap();
    assert_eq!((rows[0]["vanishes"].clone(), rows[0]["splitting_count"].clone()), (true.into(), 2.into()));
    assert_eq!((rows[1]["vanishes"].clone(), rows[1]["splitting_count"].clone()), (false.into(), 0.into()));
    let v = json(&run(&["obstruction", "--group", "C3", "--modulus", "1"]));
    assert_eq!(v["classes"][0]["splitting_count"], 1);
}
