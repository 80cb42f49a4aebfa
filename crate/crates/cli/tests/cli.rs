use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookschur")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn core_quotient_examples() {
    let doc = json(&["core-quotient", "2,2", "--t", "2", "--ell", "4"]);
    assert_eq!(doc["core"], "0");
    assert_eq!(doc["quotient"], serde_json::json!(["1", "1"]));
    assert_eq!(doc["sigmaSign"], -1);
    assert_eq!(doc["beta"], serde_json::json!([5, 4, 1, 0]));

    let doc = json(&["core-quotient", "", "--t", "3", "--ell", "3"]);
    assert_eq!(doc["quotient"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(doc["sigmaSign"], -1);

    let out = run(&["core-quotient", "2,1", "--t", "5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["core"], "2,1");
    assert_eq!(doc["input"]["ell"], 5);
}

#[test]
fn schur_examples() {
    let doc = json(&["schur", "2,2/1", "--n", "2", "--m", "1"]);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["polynomial"], "x1^2*x2 + x1^2*y1 + x1*x2^2 + 2*x1*x2*y1 + x1*y1^2 + x2^2*y1 + x2*y1^2");
    assert_eq!(json(&["schur", "2,2/2,2", "--n", "3"])["polynomial"], "1");
    assert_eq!(json(&["schur", "1,1/0", "--n", "1", "--m", "0"])["polynomial"], "0");
    let doc = json(&["schur", "3,1", "--n", "2", "--method", "tableaux"]);
    assert_eq!(doc["input"]["method"], "tableaux");
}

#[test]
fn single_shot_checks() {
    let doc = json(&["factorize", "2,2", "--t", "2", "--n", "2"]);
    assert_eq!(doc["match"], true);
    assert_eq!(doc["branch"], "factorization");
    let doc = json(&["csp", "2,2", "--t", "2", "--n", "2"]);
    assert_eq!(doc["orbitCounts"], serde_json::json!({"1": 4, "2": 8}));
    // equal signs at t = 4 but no sieving: reported as a failure
    let out = run(&["csp", "1,1,1/1", "--t", "4", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "csp", "--t", "2", "--n", "2", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = lines(&out);
    let summary = &rows.last().unwrap()["summary"];
    assert_eq!(summary["failed"], 0);
    assert_eq!(summary["config"]["maxSize"], 6);
    assert!(rows[..rows.len() - 1].iter().filter(|r| r["signCondition"] == true).all(|r| r["verdict"] == "csp_exists"));

    let out = run(&["verify", "factorize", "--t", "2", "--n", "1", "--m", "1", "--max-size", "4"]);
    assert_eq!(out.status.code(), Some(0));

    // the unsigned congruence has counterexamples when the signs differ
    let out = run(&["verify", "divisibility", "--t", "3", "--n", "1", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("first counterexample"));
    let out = run(&["verify", "divisibility-signed", "--t", "3", "--n", "1", "--max-size", "6"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn converse_search_reports_without_asserting() {
    let out = run(&["verify", "converse", "--t", "2", "--n", "1", "--max-size", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = lines(&out);
    assert!(rows.len() > 1);
    assert!(rows[..rows.len() - 1].iter().all(|r| r["asserted"] == false && r["signCondition"] == false));
}

#[test]
fn output_is_independent_of_jobs() {
    let a = run(&["verify", "ribbon-count", "--t", "2", "--n", "1", "--m", "0,1", "--max-size", "6", "--jobs", "1"]);
    let b = run(&["verify", "ribbon-count", "--t", "2", "--n", "1", "--m", "0,1", "--max-size", "6", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let timed = run(&["verify", "h-special", "--t", "3", "--n", "1", "--max-size", "4", "--timing"]);
    assert!(lines(&timed).last().unwrap()["summary"].get("elapsedMs").is_some());
}

#[test]
fn formats_and_output_file() {
    let out = run(&["verify", "h-special", "--t", "2", "--n", "1", "--max-size", "3", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("asserted,holds,k,m,n,passed,t"));
    assert_eq!(rows.count(), 4);

    let out = run(&["verify", "h-special", "--t", "2", "--n", "1", "--max-size", "1", "--format", "text"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("pass t=2 n=1 m=0 k=0"));

    let path = std::env::temp_dir().join(format!("hookschur-cli-{}.json", std::process::id()));
    let out = run(&["schur", "2,1", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc["polynomial"], "x1^2*x2 + x1*x2^2");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["core-quotient", "1,2", "--t", "2"],
        &["core-quotient", "2,1", "--t", "1"],
        &["core-quotient", "2,1/1", "--t", "2"],
        &["schur", "1/2", "--n", "1"],
        &["verify", "divisibility", "--t", "4"],
        &["verify", "ribbon-count", "--t", "4", "--d", "3"],
        &["verify", "csp", "--jobs", "0"],
        &["core-quotient", "3,2,1", "--t", "2", "--ell", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
