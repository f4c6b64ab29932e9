//! JSON documents: groups, sequences with their claims, and reports.
//!
//! A sequence document reads
//! `{"group": spec, "claim": "group" | {"action": kind, "base": point}, "steps": [{"g": element, "p": "2/3"}]}`.
//! Exact probabilities are `"a/b"` strings; decimals carry 50 significant
//! digits.

use serde_json::{json, Value};

use crate::construct::ConstructionReport;
use crate::engine::{ActionKind, Claim, MixingSequence, MixingStep, Probability, Report};
use crate::error::{MixError, Result};
use crate::group::FiniteGroup;

fn doc_err(what: impl Into<String>) -> MixError {
    MixError::Document(what.into())
}

/// A bare group spec or `{"group": spec}`.
pub fn group_from_json(v: &Value) -> Result<FiniteGroup> {
    match v.get("group") {
        Some(inner) if v.get("kind").is_none() => FiniteGroup::from_spec(inner),
        _ => FiniteGroup::from_spec(v),
    }
}

fn probability_json(p: &Probability) -> Value {
    let s = p.to_string();
    // decimals must stay decimals when read back
    if matches!(p, Probability::Decimal(_)) && !s.contains(['.', 'e', 'E']) {
        return Value::String(format!("{s}.0"));
    }
    Value::String(s)
}

fn probability_from_json(v: &Value) -> Result<Probability> {
    match v {
        Value::String(s) => Probability::parse(s),
        Value::Number(n) => Probability::parse(&n.to_string()),
        _ => Err(doc_err(format!("probability must be a string, got {v}"))),
    }
}

pub fn steps_to_json(group: &FiniteGroup, steps: &[MixingStep]) -> Value {
    Value::Array(
        steps.iter().map(|s| json!({ "g": group.element_to_json(&s.g), "p": probability_json(&s.p) })).collect(),
    )
}

pub fn steps_from_json(group: &FiniteGroup, v: &Value) -> Result<Vec<MixingStep>> {
    let list = v.as_array().ok_or_else(|| doc_err("\"steps\" must be an array"))?;
    list.iter()
        .map(|s| {
            let g = group.parse_element(s.get("g").ok_or_else(|| doc_err("step without \"g\""))?)?;
            let p = probability_from_json(s.get("p").ok_or_else(|| doc_err("step without \"p\""))?)?;
            Ok(MixingStep::new(g, p))
        })
        .collect()
}

pub fn claim_to_json(group: &FiniteGroup, claim: &Claim) -> Value {
    match claim {
        Claim::Group => json!("group"),
        Claim::Action { kind, base, subgroup } => {
            let mut v = json!({ "action": kind.name(), "base": base });
            if let Some(h) = subgroup {
                v["subgroup"] = Value::Array(h.iter().map(|x| group.element_to_json(x)).collect());
            }
            v
        }
    }
}

pub fn claim_from_json(group: &FiniteGroup, v: Option<&Value>) -> Result<Claim> {
    let Some(v) = v else { return Ok(Claim::Group) };
    if v.as_str() == Some("group") {
        return Ok(Claim::Group);
    }
    let kind: ActionKind = v
        .get("action")
        .and_then(Value::as_str)
        .ok_or_else(|| doc_err("claim must be \"group\" or {\"action\", \"base\"}"))?
        .parse()?;
    let base = v.get("base").cloned().ok_or_else(|| doc_err("action claim without \"base\""))?;
    let subgroup = match v.get("subgroup") {
        Some(Value::Array(xs)) => Some(xs.iter().map(|x| group.parse_element(x)).collect::<Result<Vec<_>>>()?),
        Some(_) => return Err(doc_err("\"subgroup\" must be an array of elements")),
        None => None,
    };
    if kind == ActionKind::Cosets && subgroup.is_none() {
        return Err(doc_err("a cosets claim needs \"subgroup\""));
    }
    Ok(Claim::Action { kind, base, subgroup })
}

pub fn sequence_to_json(seq: &MixingSequence) -> Value {
    json!({
        "group": seq.group.spec_json(),
        "claim": claim_to_json(&seq.group, &seq.claim),
        "steps": steps_to_json(&seq.group, &seq.steps),
    })
}

/// Reads a sequence document. `group` overrides a missing `"group"` field and
/// must agree with a present one.
pub fn sequence_from_json(v: &Value, group: Option<&FiniteGroup>) -> Result<MixingSequence> {
    let own = v.get("group").map(FiniteGroup::from_spec).transpose()?;
    let group = match (own, group) {
        (Some(a), Some(b)) if a.spec_json() != b.spec_json() => {
            return Err(doc_err(format!("sequence is for {} but the group file gives {}", a.name(), b.name())));
        }
        (Some(a), _) => a,
        (None, Some(b)) => b.clone(),
        (None, None) => return Err(doc_err("no group given")),
    };
    let steps = steps_from_json(&group, v.get("steps").ok_or_else(|| doc_err("missing \"steps\""))?)?;
    let claim = claim_from_json(&group, v.get("claim"))?;
    Ok(MixingSequence { group, claim, steps })
}

pub fn report_to_json(report: &Report) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

/// The sequence document with the construction report under `"report"`.
pub fn construction_to_json(report: &ConstructionReport) -> Value {
    let mut v = sequence_to_json(&report.sequence);
    v["report"] = serde_json::to_value(report).expect("report serializes");
    v
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_dihedral, construct_sym_action, ConstructOptions};
    use crate::engine::{verify, VerifyOptions};
    use crate::group::Element;

    #[test]
    fn example_z8() {
        let text = r#"{"group": {"kind": "cyclic", "n": 8}, "claim": "group",
            "steps": [{"g": 1, "p": "1/2"}, {"g": 2, "p": "1/2"}, {"g": 4, "p": "1/2"}]}"#;
        let seq = sequence_from_json(&parse(text).unwrap(), None).unwrap();
        assert_eq!(seq.steps[2].g, Element::Cyclic(4));
        assert!(verify(&seq, &VerifyOptions::default()).unwrap().uniform);
        let back = sequence_to_json(&seq);
        assert_eq!(sequence_from_json(&back, None).unwrap(), seq);
        assert_eq!(back, sequence_to_json(&sequence_from_json(&back, None).unwrap()));
    }

    #[test]
    fn decimals_round_trip() {
        let r = construct_dihedral(5, &ConstructOptions::default()).unwrap();
        let v = construction_to_json(&r);
        let seq = sequence_from_json(&v, None).unwrap();
        assert_eq!(seq.steps.len(), 5);
        let p = v["steps"][1]["p"].as_str().unwrap();
        assert!(p.trim_start_matches("0.").len() >= 40, "{p}");
        assert_eq!(sequence_to_json(&seq), sequence_to_json(&r.sequence));
        assert_eq!(v["report"]["family"], "dihedral");
    }

    #[test]
    fn action_claims() {
        let r = construct_sym_action(7, &ConstructOptions::default()).unwrap();
        let v = sequence_to_json(&r.sequence);
        assert_eq!(v["claim"]["action"], "natural");
        let seq = sequence_from_json(&v, None).unwrap();
        assert_eq!(seq.claim, r.sequence.claim);
        assert!(verify(&seq, &VerifyOptions::default()).unwrap().uniform);
    }

    #[test]
    fn group_override_and_errors() {
        let g = FiniteGroup::cyclic(4);
        let v = json!({"steps": [{"g": 1, "p": "1/2"}, {"g": 2, "p": "1/2"}]});
        assert_eq!(sequence_from_json(&v, Some(&g)).unwrap().group, g);
        assert!(sequence_from_json(&v, None).is_err());
        let w = json!({"group": {"kind": "cyclic", "n": 5}, "steps": []});
        assert!(sequence_from_json(&w, Some(&g)).is_err());
        let bad = json!({"group": {"kind": "cyclic", "n": 4}, "steps": [{"g": 1}]});
        assert!(sequence_from_json(&bad, None).is_err());
        assert_eq!(group_from_json(&json!({"group": {"kind": "cyclic", "n": 4}})).unwrap(), g);
    }
}
