use std::process::{Command, Output};

fn zdchroma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdchroma")).args(args).env_remove("ZDCHROMA_MAX_ORDER").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    zdchroma(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = zdchroma(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_example_passes() {
    let text = stdout(&["analyze", "--ring", "Z8 x Z16"]);
    assert!(text.contains("omega = 9, chi = 9"));
    assert!(text.contains("status     PASS"));
}

#[test]
fn analyze_json_report() {
    let text = stdout(&["analyze", "--ring", "Z8xZ16", "--graph", "complement_gamma", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["graph"]["vertices"], 95);
    assert_eq!(v["results"]["exact"]["chi"], 76);
    assert_eq!(v["results"]["status"], "PASS");
    let classes = v["certificates"][0]["color_classes"].as_array().unwrap();
    assert_eq!(classes.len(), 76);
}

#[test]
fn analyze_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    assert_eq!(code(&["analyze", "--ring", "Z4xGF(4)", "--out", path.to_str().unwrap()]), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["ring"]["order"], 16);
}

#[test]
fn disagreement_exits_one() {
    assert_eq!(code(&["analyze", "--ring", "Z16", "--graph", "complement_gamma"]), 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["analyze", "--ring", "GF(6)"]), 2);
    assert_eq!(code(&["analyze", "--ring", "Z8 y Z16"]), 2);
    assert_eq!(code(&["analyze", "--ring", "Z8", "--no-such-flag"]), 2);
    assert_eq!(code(&["analyze", "--ring", "Z65537"]), 2);
    assert_eq!(code(&["analyze", "--ring", "Z8", "--max-order", "4"]), 2);
}

#[test]
fn exhausted_budget_exits_three() {
    let out = zdchroma(&["analyze", "--ring", "Z8xZ16", "--graph", "complement_gamma", "--budget-ms", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("TIMEOUT"));
}

#[test]
fn export_dot_and_csv() {
    let dot = stdout(&["export", "--ring", "Z8", "--graph", "gamma", "--format", "dot"]);
    assert!(dot.starts_with("graph \"gamma\" {"));
    assert_eq!(dot.matches(" -- ").count(), 2);
    let csv = stdout(&["export", "--ring", "Z8", "--graph", "gamma", "--format", "csv"]);
    assert_eq!(csv, "u,v\n2,4\n4,6\n");
}

#[test]
fn verify_csv_rows() {
    let csv = stdout(&["verify", "lem1", "--primes", "2,3", "--r-max", "3", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.iter().any(|f| f == "PASS")));
}

#[test]
fn verify_failing_family_exits_one() {
    assert_eq!(code(&["verify", "lembar", "--primes", "2", "--r-min", "4", "--r-max", "4"]), 1);
    assert_eq!(code(&["verify", "lembar", "--primes", "2", "--r-min", "3", "--r-max", "3"]), 0);
}

#[test]
fn table_prints_examples() {
    let text = stdout(&["table"]);
    assert!(text.contains("|V| = 95, |C| = 76, |V \\ C| = 19"));
}
