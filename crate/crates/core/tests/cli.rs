use std::io::Write;
use std::process::{Command, Output};

use plw::families::builtin;
use plw::io::{parse_structure, serialize_structure};

fn plw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plw")).args(args).output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn shipped_file_matches_builtin() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/ex2.11.plw");
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(parse_structure(&text).unwrap(), builtin("ex2.11").unwrap());
    let o = plw(&["check", path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)[0]["overall"], "pass");
}

#[test]
fn check_failure_exits_one() {
    let o = plw(&["check", "--builtin", "ex4.12", "--class", "prl"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let failed: Vec<&str> = v[0]["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["verdict"] == "fail")
        .map(|a| a["axiom"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["PRL2"]);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ragged.plw");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "structure r\nelements: 0 1\norder: 0<=1\nop o :\n  0 : 0 0\n  1 : 0\nend").unwrap();
    let o = plw(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    assert_eq!(plw(&["check", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(plw(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.plw");
    let o = plw(&["builtin", "ex4.22"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, &o.stdout).unwrap();
    let back = parse_structure(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back, builtin("ex4.22").unwrap());
    assert_eq!(serialize_structure(&back).as_bytes(), &o.stdout[..]);
}

#[test]
fn derive_implication_flags_cells() {
    let o = plw(&["derive-imp", "--builtin", "ex3.4", "--op", "odot", "--unchecked"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json(&o)[0];
    assert_eq!(v["table"][1][2], "4");
    let notes = v["diagnostics"].as_array().unwrap();
    assert!(notes.iter().any(|d| d["cell"] == serde_json::json!(["1", "2"]) && d["note"] == "sup-not-attained"));
}

#[test]
fn filters_and_quotients() {
    let o = plw(&["filters", "--builtin", "ex4.20"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let proper = v[0]["filters"].as_array().unwrap().iter().filter(|f| f["proper"] == true).count();
    assert_eq!(proper, 3);

    let o = plw(&["quotient", "--builtin", "ex6.10", "--filter", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["blocks"], serde_json::json!([["0", "1"], ["2", "3"]]));
    assert_eq!(v["prl"]["overall"], "pass");
}

#[test]
fn enumeration_report() {
    let o = plw(&["enumerate", "--size", "3", "--class", "ptnorm", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["cap_exceeded"], true);
    assert!(v["count"].as_u64().unwrap() >= 2);
    let o = plw(&["enumerate", "--size", "3", "--class", "ptnorm"]);
    assert_eq!(json(&o)["count"], 8);
}

#[test]
fn dot_for_the_diamond() {
    let o = plw(&["export-dot", "--builtin", "lea:diamond"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.matches(" -> ").count(), 4);
    assert!(text.starts_with("digraph"));
}

#[test]
fn verify_reports_counterexamples() {
    let o = plw(&["verify", "--builtin", "ex2.11", "--theorems", "Thm4.8"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)[0]["status"], "counterexample");
    let o = plw(&["verify", "--builtin", "goedel:3", "--theorems", "Thm4.13,Thm4.24"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(plw(&["verify", "--builtin", "goedel:3", "--theorems", "Thm0.0"]).status.code(), Some(2));
}

#[test]
fn infer_order_lists_candidates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.plw");
    std::fs::write(&path, serialize_structure(&builtin("goedel:3").unwrap())).unwrap();
    let o = plw(&["infer-order", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["covers"], serde_json::json!([["0", "1"], ["1", "2"]]));
}

#[test]
fn builtin_list() {
    let o = plw(&["builtin", "--list"]);
    let text = String::from_utf8(o.stdout).unwrap();
    for id in ["ex2.11", "ex6.24", "grid:ex2.10:D:ALPHA", "zlprl:N"] {
        assert!(text.lines().any(|l| l.trim() == id), "{id}");
    }
}
