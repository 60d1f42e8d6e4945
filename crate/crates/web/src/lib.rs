//! Browser bindings for three queries. Each returns a JSON string; the
//! `*_json` functions are the same operations without the wasm wrapper so
//! they can be tested natively.

use wasm_bindgen::prelude::*;

use hecke_centraliser::algebra::{RationalFunctions, Rationals};
use hecke_centraliser::cellular::triangularity_check;
use hecke_centraliser::diagnostics::{dc_check_spec, gamma_graph_analysis};
use hecke_centraliser::domain::Domain;
use hecke_centraliser::hecke::HeckeAlgebra;
use hecke_centraliser::modules::parse_summands;
use hecke_centraliser::perm::Perm;

/// Anything larger stalls the page.
const MAX_N: usize = 5;

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Double centraliser check of a Young sum such as `M(3,1)+M(4)` over a
/// domain like `Q`, `F2` or `F3`.
pub fn dc_check_json(module: &str, field: &str, q: &str) -> Result<String, String> {
    let summands = parse_summands(module).map_err(|e| e.to_string())?;
    let n = summands[0].partition.degree();
    if n > MAX_N {
        return Err(format!("n = {n} is too large for the browser (max {MAX_N})"));
    }
    let domain: Domain = field.parse().map_err(|e: hecke_centraliser::Error| e.to_string())?;
    if !domain.is_field() {
        return Err(format!("{domain} is not a field"));
    }
    let report = dc_check_spec(domain, q, n, &summands).map_err(|e| e.to_string())?;
    to_json(&serde_json::json!({ "n": n, "domain": domain.to_string(), "report": report }))
}

/// Components of the graph on `Sym(m)` generated by conjugates of `t`, with
/// annihilator dimensions over Q and F_2.
pub fn gamma_json(m: usize, t: &str) -> Result<String, String> {
    if m > MAX_N {
        return Err(format!("m = {m} is too large for the browser (max {MAX_N})"));
    }
    let t = Perm::parse(m, t).map_err(|e| e.to_string())?;
    let report = gamma_graph_analysis(m, &t, &[Domain::Q, Domain::Fp(2)]).map_err(|e| e.to_string())?;
    to_json(&report)
}

/// Triangularity of the pairing on the Murphy basis over Q(t).
pub fn triangularity_json(n: usize) -> Result<String, String> {
    if !(1..=4).contains(&n) {
        return Err("n must be between 1 and 4".into());
    }
    let k = RationalFunctions::new(Rationals);
    let alg = HeckeAlgebra::new(k.clone(), n, k.t()).map_err(|e| e.to_string())?;
    let report = triangularity_check(&alg).map_err(|e| e.to_string())?;
    to_json(&report)
}

#[wasm_bindgen]
pub fn dc_check(module: &str, field: &str, q: &str) -> Result<String, JsValue> {
    dc_check_json(module, field, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn gamma(m: usize, t: &str) -> Result<String, JsValue> {
    gamma_json(m, t).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn triangularity(n: usize) -> Result<String, JsValue> {
    triangularity_json(n).map_err(|e| JsValue::from_str(&e))
}
