//! JSON encodings. Objects use sorted keys and rationals are `[num, den]`
//! in lowest terms, so output is canonical and round-trips byte for byte.

use serde_json::{json, Map, Value};
use tightmaps_core::catalog::Discrepancy;
use tightmaps_core::classify::Verdict;
use tightmaps_core::pisystem::{FactorDescriptor, Violation};
use tightmaps_core::survey::SurveyRow;
use tightmaps_core::tightness::TightnessCertificate;
use tightmaps_core::{Rational, Root, Status};

pub fn rational(r: &Rational) -> Value {
    json!([r.numer(), r.denom()])
}

pub fn root(r: &Root) -> Value {
    json!(r.coeffs())
}

pub fn roots(rs: &[Root]) -> Value {
    Value::Array(rs.iter().map(root).collect())
}

pub fn status(s: Status) -> Value {
    json!(s.as_str())
}

pub fn certificate(c: &TightnessCertificate) -> Value {
    json!({
        "ratios": c.ratios.iter().map(rational).collect::<Vec<_>>(),
        "ranks": c.ranks,
        "ambient_rank": c.ambient_rank,
        "weighted_sum": rational(&c.weighted_sum),
        "verdict": status(c.verdict),
    })
}

pub fn factor(f: &FactorDescriptor) -> Value {
    json!({
        "name": f.name(),
        "cartan_type": f.cartan_type.to_string(),
        "rank": f.rank,
        "compact": f.is_compact(),
        "gamma": root(&f.gamma),
        "noncompact_root": f.noncompact_root.as_ref().map(root),
        "members": roots(&f.members),
    })
}

pub fn violation(v: &Violation) -> Value {
    json!({
        "condition": v.condition(),
        "detail": v.to_string(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let trace: Vec<Value> = v
        .trace
        .iter()
        .map(|s| {
            let values: Map<String, Value> = s
                .values
                .iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect();
            json!({
                "rule": s.rule.name(),
                "citation": s.rule.citation(),
                "values": values,
            })
        })
        .collect();
    json!({ "status": status(v.status), "trace": trace })
}

pub fn discrepancy(d: &Discrepancy) -> Value {
    json!({
        "entry": d.entry,
        "ambient": d.ambient.to_string(),
        "params": d.params.to_string(),
        "printed": d.printed,
        "corrected": d.corrected,
        "identified": d.identified,
        "resolved": d.resolved,
        "minimal": d.minimal,
        "failing_instances": d.failing_instances,
        "note": d.note,
    })
}

pub fn survey_row(r: &SurveyRow) -> Value {
    json!({
        "label": r.label,
        "expected": status(r.expected),
        "actual": status(r.actual),
        "detail": r.detail,
    })
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}
