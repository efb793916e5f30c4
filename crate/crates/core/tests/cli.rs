use std::process::Command;

use serde_json::Value;

fn braidlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_braidlab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap().trim().to_string(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = braidlab(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn braid_equality() {
    assert_eq!(braidlab(&["braid", "eq", "s1 s2 s1", "s2 s1 s2", "--n", "3"]).1, "true");
    assert_eq!(braidlab(&["braid", "eq", "A[1,2]", "s1^2", "--n", "3"]).1, "true");
    assert_eq!(braidlab(&["braid", "eq", "s1 s2", "s2 s1", "--n", "3"]).1, "false");
}

#[test]
fn artin_images() {
    let v = json(&["braid", "act", "s1", "--n", "2"]);
    assert_eq!(v["images"], serde_json::json!(["x2", "x2^-1 x1 x2"]));
}

#[test]
fn relation_suite_passes() {
    let v = json(&["braid", "verify-relations", "--n", "4"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn kohno_dimension() {
    assert_eq!(braidlab(&["kohno", "dim", "--k", "4", "--deg", "2"]).1, "4");
}

#[test]
fn kohno_relation_normalizes_to_zero() {
    let v = json(&["kohno", "normalize", "[B[1,2], B[1,3] + B[2,3]]", "--k", "3"]);
    assert_eq!(v["text"], "0");
}

#[test]
fn reduced_ranks() {
    assert_eq!(braidlab(&["kn", "rank", "--n", "3", "--t", "2"]).1, "3");
    assert_eq!(braidlab(&["kn", "rank", "--n", "3", "--t", "3"]).1, "2");
    assert_eq!(braidlab(&["kn", "eq", "x1 x2 x1^-1 x2 x1 x2^-1 x1^-1 x2^-1", "", "--n", "2"]).1, "true");
}

#[test]
fn simplicial_commands() {
    let v = json(&["simp", "theta", "--n", "1", "x1"]);
    assert_eq!(v["braid"], "A[1,2]");
    assert_eq!(braidlab(&["simp", "cycle", "--family", "fs1", "--n", "2", "x1^-1 x2^-1 x1 x2"]).1, "true");
    let v = json(&["simp", "face", "--family", "FS1", "--t", "2", "--n", "2", "x2"]);
    assert_eq!(v["result"], "x1");
    let v = json(&["simp", "verify", "--family", "ks1", "--max-degree", "3", "--samples", "5"]);
    assert_eq!(v["pass"], true);
}

#[test]
fn theta_verify_respects_budget() {
    let v = json(&["theta", "verify", "--n", "3", "--max-degree", "3"]);
    assert_eq!(v["pass"], true);
    assert_eq!(braidlab(&["theta", "verify", "--n", "5", "--max-degree", "6"]).0, 3);
    assert_eq!(braidlab(&["theta", "verify", "--n", "5", "--max-degree", "4", "--budget", "deep"]).0, 0);
}

#[test]
fn error_exit_codes() {
    assert_eq!(braidlab(&["nonsense"]).0, 2);
    assert_eq!(braidlab(&["braid", "eq", "s1 q", "s1", "--n", "3"]).0, 2);
    assert_eq!(braidlab(&["lie", "bracket", "x1", "[x2", "--n", "2"]).0, 2);
    assert_eq!(braidlab(&["verify", "all", "--budget", "huge"]).0, 2);
}

#[test]
fn smoke_report_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("braidlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let (code, out, _) = braidlab(&["verify", "all", "--budget", "smoke", "--seed", "7", "--out", file.to_str().unwrap()]);
    assert!(out.is_empty());
    let first = std::fs::read_to_string(&file).unwrap();
    let (_, second, _) = braidlab(&["verify", "all", "--budget", "smoke", "--seed", "7"]);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    let failing: Vec<&Value> = v["suites"].as_array().unwrap().iter().filter(|s| !s["failures"].as_array().unwrap().is_empty()).collect();
    assert_eq!(code, if failing.is_empty() { 0 } else { 1 });
    std::fs::remove_dir_all(&dir).unwrap();
}
