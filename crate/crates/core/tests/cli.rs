use std::path::Path;
use std::process::{Command, Output};

use dirings::{BinOp, FiniteGroup, NamedOp, StandardGroup};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirings"))
        .args(args)
        .env_remove("DIRINGS_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(stem: &str) -> String {
    dirings::io::fixture_path(stem).display().to_string()
}

#[test]
fn malformed_group_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"order": 2, "add": [[0, 1], [1, 1]]}"#).unwrap();
    let o = run(&["classify", bad.to_str().unwrap(), "plus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a group"));

    let short = dir.path().join("short.json");
    std::fs::write(&short, r#"{"n": 2, "table": [[0, 1]]}"#).unwrap();
    let o = run(&["classify", &fixture("cyclic2"), short.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size mismatch"));
}

#[test]
fn classify_reports_fixed_order_flags() {
    let o = run(&["classify", &fixture("sym3"), "conj"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["profile"]["associative"], false);
    assert_eq!(v["profile"]["left_distributive"], true);
    assert_eq!(v["profile"]["weakly_associative"], true);
    assert!(text.find("\"class\"").unwrap() < text.find("\"profile\"").unwrap());

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["classify", "z2", "plus"]))).unwrap();
    assert_eq!(v["class"]["left_skew_brace"], true);
}

#[test]
fn convert_writes_a_reparsable_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dot.json");
    let o = run(&[
        "--output",
        out.to_str().unwrap(),
        "convert",
        "--direction",
        "skew-to-weak",
        "sym3",
        "plus_op",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = dirings::io::load_binop(&out).unwrap();
    let g = FiniteGroup::standard(StandardGroup::Sym3).unwrap();
    assert_eq!(dot, BinOp::named(&g, NamedOp::Conj));

    let o = run(&[
        "convert",
        "--direction",
        "weak-to-skew",
        "sym3",
        out.to_str().unwrap(),
    ]);
    let back: BinOp = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(back, BinOp::named(&g, NamedOp::PlusOp));

    let o = run(&["convert", "--direction", "skew-to-weak", "sym3", "conj"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_round_trips() {
    let o = run(&["catalog", "z2"]);
    let bundle: dirings::io::OpsBundle = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(bundle.ops["conj"], bundle.ops["pi2"]);
    assert_eq!(
        dirings::io::to_json_string(&bundle).trim(),
        stdout(&o).trim()
    );
}

#[test]
fn enumerate_and_budget() {
    let o = run(&["enumerate", "--group", "z2", "--require", "group0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 1);
    assert_eq!(v["complete"], true);

    let o = run(&[
        "enumerate",
        "--group",
        "z3",
        "--require",
        "assoc,lskew",
        "--pairs",
        "--upto-aut",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["count"].as_u64().unwrap() <= v["labeled_count"].as_u64().unwrap());

    let o = Command::new(env!("CARGO_BIN_EXE_dirings"))
        .args(["enumerate", "--group", "z3", "--require", "assoc"])
        .env("DIRINGS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complete"], false);
}

#[test]
fn verify_paper_and_exit_codes() {
    let o = run(&[
        "--format",
        "table",
        "verify-paper",
        "trivial",
        &fixture("cyclic2"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("congruences and ideals"));
    assert!(!stdout(&o).contains("FAIL"));

    let o = run(&["verify-paper", "--budget", "3", "z3"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&[
        "verify-paper",
        Path::new("no/such/file.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sampling_needs_a_seed() {
    assert_eq!(run(&["bg", "z3", "--sample", "10"]).status.code(), Some(2));
    let o = run(&["bg", "z3", "--sample", "1000", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn ideals_of_a_near_ring() {
    let o = run(&["ideals", "z4", "pi2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ideals"], v["specialized"]);
    assert_eq!(
        v["ideals"].as_array().unwrap().len(),
        v["congruences"].as_array().unwrap().len()
    );
    let o = run(&["ideals", "trivial"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ideals"], serde_json::json!([[0]]));
}
