use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitring")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap().trim_end().to_string()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("unitring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn realize_cardinal_examples() {
    let v = json(&["realize-cardinal", "21"]);
    assert_eq!(v["realizable"], true);
    assert_eq!(v["witness"]["type"], "product_of_fields");
    assert_eq!(v["witness"]["degrees"], serde_json::json!([3, 2]));
    let v = json(&["realize-cardinal", "5"]);
    assert_eq!(v["realizable"], false);
    assert!(v["reason"].is_string());
    let v = json(&["realize-cardinal", "inf"]);
    assert_eq!(v["witness"]["type"], "rational_function_field");
    let v = json(&["realize-cardinal", "aleph1"]);
    assert_eq!(v["witness"]["cardinal"], "aleph_1");
    let v = json(&["realize-cardinal", "14"]);
    assert_eq!(v["witness"], serde_json::json!({"type": "even_unit_ring", "m": 7}));
}

#[test]
fn realize_group_examples() {
    let v = json(&["realize-group", "C3 x C3"]);
    assert_eq!(v["realizable"], true);
    assert_eq!(v["witness"]["degrees"], serde_json::json!([2, 2]));
    assert_eq!(v["s_ring_cross_check"]["agrees"], true);
    assert_eq!(json(&["realize-group", "C9"])["realizable"], false);
    assert_eq!(json(&["realize-group", "3,7"])["witness"]["degrees"], serde_json::json!([3, 2]));
    let v = json(&["realize-group", "C21"]);
    assert_eq!(v["witness"]["degrees"], serde_json::json!([3, 2]));
    let v = json(&["realize-group", "C4 x C3"]);
    assert_eq!(v["in_scope"], false);
}

#[test]
fn misc_examples() {
    assert_eq!(stdout(&["tensor-split", "2", "3"]), r#"{"degrees":[6]}"#);
    assert_eq!(stdout(&["survey-r2m", "3"]), r#"{"count":6,"orders":{"1":1,"2":1,"3":2,"6":2}}"#);
    let v = json(&["pgroup", "2", "1"]);
    assert_eq!(v["in_scope"], false);
    assert!(v["reason"].as_str().unwrap().contains("does not hold"));
    assert_eq!(json(&["pgroup", "31", "1,1,1"])["witness"]["degrees"], serde_json::json!([5, 5, 5]));
    assert_eq!(json(&["pgroup", "5", "1"])["realizable"], false);
    assert_eq!(json(&["pgroup", "7", "2"])["realizable"], false);
    assert_eq!(json(&["mersenne-check", "63"])["holds"], true);
    let v = json(&["factor-poly", "1ff"]);
    assert_eq!(v["degrees"], serde_json::json!([2, 6]));
}

#[test]
fn seed_does_not_change_factorization() {
    let a = stdout(&["factor-poly", "--seed", "1", "fffff"]);
    let b = stdout(&["--seed", "99", "factor-poly", "fffff"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["realize-cardinal", "12x"]).status.code(), Some(2));
    assert_eq!(run(&["realize-cardinal", "18446744073709551616"]).status.code(), Some(2));
    assert_eq!(run(&["realize-group", "C3 y C5"]).status.code(), Some(2));
    assert_eq!(run(&["factor-poly", "xyz"]).status.code(), Some(2));
    assert_eq!(run(&["factor-poly", "1"]).status.code(), Some(2));
    assert_eq!(run(&["survey-r2m", "0"]).status.code(), Some(2));
    assert_eq!(run(&["survey-r2m", "1000001"]).status.code(), Some(3));
    assert_eq!(run(&["pgroup", "9", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/witness.json"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    let bad = run(&["realize-group", "C3 y C5"]);
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("y"));
}

#[test]
fn realize_output_verifies() {
    for args in [
        &["realize-cardinal", "21"][..],
        &["realize-cardinal", "2000"],
        &["realize-cardinal", "aleph0"],
        &["realize-group", "C3 x C3 x C7"],
        &["pgroup", "7", "1,1"],
    ] {
        let out = stdout(args);
        let path = temp_file("w.json", &out);
        let v = json(&["verify", path.to_str().unwrap()]);
        assert_eq!(v["verified"], true, "{args:?}");
    }
}

#[test]
fn verify_reports_mismatch_and_guard() {
    let path = temp_file(
        "bad.json",
        r#"{"witness":{"type":"product_of_fields","degrees":[1]},"query":{"cardinal":"2"}}"#,
    );
    assert_eq!(json(&["verify", path.to_str().unwrap()])["verified"], false);
    let path = temp_file(
        "big.json",
        r#"{"witness":{"type":"product_of_fields","degrees":[61,3]},"query":{"group":[[7,1],[2305843009213693951,1]]}}"#,
    );
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["method"], "formula");
    let path = temp_file("junk.json", "not json");
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        &["realize-cardinal", "21"][..],
        &["realize-cardinal", "35"],
        &["realize-group", "C3 x C3"],
        &["realize-group", "C4"],
        &["pgroup", "2", "1"],
        &["factor-poly", "1ff"],
        &["tensor-split", "4", "6"],
        &["survey-r2m", "12"],
        &["mersenne-check", "20"],
    ] {
        let compact = stdout(args);
        let v: Value = serde_json::from_str(&compact).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), compact, "{args:?}");
        let mut pretty_args = args.to_vec();
        pretty_args.push("--json-pretty");
        let pretty = stdout(&pretty_args);
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), pretty);
        assert!(pretty.contains('\n'));
    }
}
