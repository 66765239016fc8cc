use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coset-indicator"))
        .args(args)
        .env_remove("COSET_INDICATOR_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Vec<Value>, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let v: Value = serde_json::from_slice(&out.stdout).expect("json output");
    (v.as_array().expect("array").clone(), out.status.code().unwrap())
}

fn field<'a>(v: &'a Value, key: &str) -> &'a str {
    v[key].as_str().unwrap_or_else(|| panic!("{} is a string", key))
}

#[test]
fn involutions_with_check() {
    let out = run(&["involutions", "--n", "4", "--alpha", "2,2", "--b", "(2 3)", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Gamma = [[1,1],[1,1]]"), "{}", text);
    assert!(text.contains("Gamma is symmetric"));
    assert!(text.contains("oracle = 1"));
    assert!(text.contains(" 1 [closed-form-young] (oracle=1)"));
}

#[test]
fn involutions_values() {
    let (rs, code) = json(&["involutions", "--n", "4", "--alpha", "4", "--b", "()"]);
    assert_eq!(code, 0);
    assert_eq!(field(&rs[0], "value"), "10");
    let (rs, _) = json(&["involutions", "--n", "3", "--alpha", "1,1,1", "--b", "(1 2 3)", "--check"]);
    assert_eq!(field(&rs[0], "value"), "0");
    assert_eq!(field(&rs[0], "certificate"), "oracle=0");
    let text = String::from_utf8(run(&["involutions", "--n", "3", "--alpha", "1,1,1", "--b", "(1 2 3)"]).stdout).unwrap();
    assert!(text.contains("not symmetric"));
}

#[test]
fn verify_recurrence_suite() {
    let (rs, code) = json(&["verify", "--suite", "recurrence", "--max-n", "8", "--r", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0]["suite"], "recurrence");
    assert_eq!(rs[0]["instances"], 9);
    assert_eq!(rs[0]["failures"], 0);
}

#[test]
fn verify_stab_identity_with_m() {
    let (rs, code) = json(&["verify", "--suite", "stab-identity", "--max-n", "10", "--m", "4"]);
    assert_eq!(code, 0);
    assert_eq!(rs[0]["failures"], 0);
    assert!(rs[0]["instances"].as_u64().unwrap() > 0);
}

#[test]
fn young_indicators_are_never_negative() {
    for b in ["()", "(2 3)", "(1 3)(2 4)"] {
        let (rs, code) = json(&["indicator", "--n", "4", "--alpha", "2,2", "--b", b]);
        assert_eq!(code, 0, "b = {}", b);
        assert!(!rs.is_empty());
        for r in &rs {
            assert!(["0", "1"].contains(&field(r, "value")), "{:?}", r);
        }
    }
}

#[test]
fn indicator_special_values() {
    let (rs, _) = json(&["indicator", "--n", "3", "--alpha", "2,1", "--b", "()", "--r", "1"]);
    let trivial: Vec<&Value> = rs
        .iter()
        .filter(|r| r["query"]["lambda"] == "[[(2),()],[(),(1)]]")
        .collect();
    assert!(!trivial.is_empty(), "{:?}", rs);
    assert!(trivial.iter().all(|r| field(r, "value") == "1"));

    let (rs, code) = json(&["indicator", "--n", "3", "--alpha", "1,1,1", "--b", "(1 2 3)"]);
    assert_eq!(code, 0);
    assert!(rs.iter().all(|r| field(r, "value") == "0"));
    let methods: Vec<&str> = rs.iter().map(|r| field(r, "method")).collect();
    assert!(methods.contains(&"formula") && methods.contains(&"direct-trace") && methods.contains(&"closed-form-young"));
}

#[test]
fn roots_and_expansion_checks() {
    let (rs, code) = json(&["roots", "--n", "6", "--r", "3", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(field(&rs[0], "value"), "81");
    let (rs, code) = json(&["expansion", "--n", "5", "--alpha", "3,2", "--b", "(3 4)", "--r", "2", "--check"]);
    assert_eq!(code, 0);
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| field(r, "method") == "formula"));
}

#[test]
fn csv_header_names_query_parameters() {
    let out = run(&["tables", "recurrence", "--max-n", "4", "--r", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,r,value,method,certificate");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[5], "4,2,10,recurrence,none");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["involutions", "--n", "4", "--alpha", "2,3"]).status.code(), Some(1));
    assert_eq!(run(&["involutions", "--n", "4", "--alpha", "2,2", "--b", "(1 9)"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["indicator", "--n", "3", "--alpha", "2,1", "--cap", "10"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_coset-indicator"))
        .args(["indicator", "--n", "3", "--alpha", "2,1"])
        .env("COSET_INDICATOR_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["indicator", "--n", "4", "--alpha", "2,1,1", "--b", "(1 3)", "--r", "3", "--format", "json"];
    let a = run(&args).stdout;
    let b = run(&["--workers", "1"].iter().chain(args.iter()).copied().collect::<Vec<_>>()).stdout;
    assert_eq!(a, b);
}
