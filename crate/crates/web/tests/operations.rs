use serde_json::Value;

use hecke_web::{dc_check_json, gamma_json, triangularity_json};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn dc_check_examples() {
    let v = parse(dc_check_json("M(3,1)+M(4)", "F2", "1").unwrap());
    assert_eq!(v["n"], 4);
    assert_eq!(v["report"]["dims"]["ann"], 14);
    assert_eq!(v["report"]["dims"]["dend"], 10);
    let v = parse(dc_check_json("M(2,2)", "F2", "1").unwrap());
    assert_eq!(v["report"]["dc_holds"], false);
    let v = parse(dc_check_json("M(2,1)", "Q", "-1").unwrap());
    assert_eq!(v["report"]["dc_holds"], true);
}

#[test]
fn dc_check_rejects_bad_input() {
    assert!(dc_check_json("M(2,x)", "Q", "1").is_err());
    assert!(dc_check_json("M(2,1)", "Z", "1").is_err());
    assert!(dc_check_json("M(2,1)", "G7", "1").is_err());
    assert!(dc_check_json("M(6)", "Q", "1").is_err());
}

#[test]
fn gamma_double_transposition() {
    let v = parse(gamma_json(4, "(13)(24)").unwrap());
    assert_eq!(v["components"], 6);
    assert_eq!(v["bipartite_components"], 0);
    assert!(gamma_json(3, "(123)").is_err());
}

#[test]
fn triangularity_small_n() {
    let v = parse(triangularity_json(3).unwrap());
    assert_eq!(v["pairings"], 18);
    assert!(triangularity_json(5).is_err());
}
