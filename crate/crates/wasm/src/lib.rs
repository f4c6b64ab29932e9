//! Browser bindings. Every export takes and returns JSON strings so the page
//! needs no generated glue beyond `wasm-bindgen`'s own.

use mixable::construct::{self, ConstructOptions, ConstructionReport};
use mixable::engine::{self, Mode, VerifyOptions};
use mixable::{document, structure, DEFAULT_ENUM_BOUND};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Groups above this order are refused in the browser.
const BROWSER_BOUND: u128 = 200_000;

fn build(family: &str, n: u32) -> mixable::Result<ConstructionReport> {
    let opts = ConstructOptions::default();
    let u = n as usize;
    match family {
        "sym" => construct::construct_sym_fast(u, &opts),
        "sym-adjacent" => construct::construct_sym_adjacent(u, &opts),
        "sym-action" => construct::construct_sym_action(u, &opts),
        "alt" => construct::construct_alt_full(u, &opts),
        "dihedral" => construct::construct_dihedral(n as u64, &opts),
        "cyclic2" => construct::construct_cyclic_2group(n, &opts),
        "coxeter-b" => construct::construct_signed_perm(u, false, &opts),
        "coxeter-d" => construct::construct_signed_perm(u, true, &opts),
        "psl2" => construct::construct_psl2_char2(n, &opts),
        other => Err(mixable::MixError::InvalidParameter(format!("unknown family {other}"))),
    }
}

/// Certified sequence document (with its `"report"`) for a family.
pub fn construct_json(family: &str, n: u32) -> Result<String, String> {
    let r = build(family, n).map_err(|e| e.to_string())?;
    Ok(document::construction_to_json(&r).to_string())
}

/// Verification report for a sequence document; `mode` is `""`, `"exact"`
/// or `"numeric"`.
pub fn verify_json(doc: &str, mode: &str) -> Result<String, String> {
    let v = document::parse(doc).map_err(|e| e.to_string())?;
    let seq = document::sequence_from_json(&v, None).map_err(|e| e.to_string())?;
    let mode = match mode {
        "" => None,
        m => Some(m.parse::<Mode>().map_err(|e| e.to_string())?),
    };
    let opts = VerifyOptions { mode, enum_bound: BROWSER_BOUND.min(DEFAULT_ENUM_BOUND), ..VerifyOptions::default() };
    let report = engine::verify(&seq, &opts).map_err(|e| e.to_string())?;
    Ok(document::report_to_json(&report).to_string())
}

/// Structure report for a group spec such as `{"kind": "alternating", "n": 4}`.
pub fn analyze_json(spec: &str) -> Result<String, String> {
    let v = document::parse(spec).map_err(|e| e.to_string())?;
    let g = document::group_from_json(&v).map_err(|e| e.to_string())?;
    let r = structure::analyze(&g, BROWSER_BOUND).map_err(|e| e.to_string())?;
    Ok(json!({ "group": g.name(), "order": g.order().to_string(), "report": r }).to_string())
}

#[wasm_bindgen]
pub fn construct(family: &str, n: u32) -> Result<String, JsValue> {
    construct_json(family, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(doc: &str, mode: &str) -> Result<String, JsValue> {
    verify_json(doc, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(spec: &str) -> Result<String, JsValue> {
    analyze_json(spec).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn construct_then_verify() {
        let doc = construct_json("dihedral", 12).unwrap();
        let v: Value = serde_json::from_str(&doc).unwrap();
        assert!(v["report"]["length"].as_u64().unwrap() <= 5);
        let r: Value = serde_json::from_str(&verify_json(&doc, "").unwrap()).unwrap();
        assert_eq!(r["uniform"], true);
        assert_eq!(r["max_dev"], "0");
    }

    #[test]
    fn broken_sequence() {
        let doc = r#"{"group": {"kind": "cyclic", "n": 8}, "steps": [{"g": 1, "p": "1/2"}, {"g": 2, "p": "1/2"}]}"#;
        let r: Value = serde_json::from_str(&verify_json(doc, "exact").unwrap()).unwrap();
        assert_eq!(r["max_dev"], "1/8");
        assert!(verify_json(doc, "fuzzy").is_err());
        assert!(verify_json("{", "").is_err());
    }

    #[test]
    fn analyze_a4() {
        let r: Value = serde_json::from_str(&analyze_json(r#"{"kind": "alternating", "n": 4}"#).unwrap()).unwrap();
        assert_eq!(r["report"]["odd_quotient_order"], 3);
        assert!(analyze_json(r#"{"kind": "symmetric", "n": 12}"#).is_err());
        assert!(construct_json("nope", 3).is_err());
    }
}
