use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke-dc"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout).to_string();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json, stdout)
}

#[test]
fn dc_check_over_three_fields() {
    let (code, v, _) = run(&["dc-check", "--module", "M(3,1)+M(4)", "--field", "Q,Fp:2,F3"]);
    assert_eq!(code, 0);
    let fields = v["fields"].as_array().unwrap();
    assert_eq!(fields.len(), 3);
    assert_eq!(fields[1]["domain"], "F_2");
    for f in fields {
        assert_eq!(f["dims"]["ann"], 14);
        assert_eq!(f["dims"]["dend"], 10);
        assert_eq!(f["dc_holds"], true);
    }
}

#[test]
fn counterexample_and_wrong_characteristic() {
    let (code, v, _) = run(&["counterexample"]);
    assert_eq!(code, 0);
    assert_eq!(v["failing_primes"], serde_json::json!([2]));
    assert_eq!(v["rational"]["dims"]["ann"], 10);
    let (code, _, _) = run(&["counterexample", "--field", "Q"]);
    assert_eq!(code, 1);
}

#[test]
fn spec_file_input() {
    let dir = std::env::temp_dir().join(format!("hecke-dc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m22.json");
    std::fs::write(
        &path,
        r#"{"n":4,"q":{"domain":"Fp","p":2,"value":1},"summands":[{"partition":[2,2]}]}"#,
    )
    .unwrap();
    let out = dir.join("out.json");
    let (code, _, stdout) = run(&["ann", "--spec", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["fields"][0]["domain"], "F_2");
    assert!(v["fields"][0]["dim"].as_u64().unwrap() >= 11);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cell_verify_outcomes() {
    let (code, v, _) = run(&["cell-verify", "--module", "M(2,1)", "--q", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(v["fields"][0]["relation"], "equal");
    let (code, v, _) = run(&["cell-verify", "--module", "M(2,2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["fields"][0]["relation"], "HypothesisFails");
    let (code, v, _) = run(&["cell-verify", "--module", "M(3,1)+M(4)", "--q", "2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["fields"][0]["domain"], "F_2");
}

#[test]
fn graph_tensor_and_murphy() {
    let (code, v, _) = run(&["graph-example", "--m", "4", "--t", "(13)(24)"]);
    assert_eq!(code, 0);
    assert_eq!(v["components"], 6);
    assert_eq!(v["bipartite_components"], 0);
    let (code, v, _) = run(&["tensor-report", "--n", "4", "--r", "2", "--m", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["expected_ann"], 1);
    let (code, v, _) = run(&["murphy-table", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["fields"][0]["basis"].as_array().unwrap().len(), 6);
    assert_eq!(v["fields"][0]["triangularity"]["pairings"], 18);
}

#[test]
fn cell_ideal_and_pretty_output() {
    let (code, v, _) = run(&["cell-ideal", "--n", "3", "--tau", "(2,1);(1,1,1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["fields"][0]["dim"], 5);
    assert_eq!(v["fields"][0]["two_sided_ideal"], true);
    let (code, v, stdout) = run(&["hook-report", "--module", "M(3,1)+M(4)", "--pretty"]);
    assert_eq!(code, 0);
    assert!(v.is_null());
    assert!(stdout.contains("matches_formula"));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(run(&["ann"]).0, 1);
    assert_eq!(run(&["ann", "--module", "M(2,x)"]).0, 1);
    assert_eq!(run(&["no-such-command"]).0, 1);
    assert_eq!(run(&["graph-example", "--m", "3", "--t", "(123)"]).0, 1);
    assert_eq!(run(&["dc-check", "--module", "M(2,1)", "--field", "Z"]).0, 1);
}
