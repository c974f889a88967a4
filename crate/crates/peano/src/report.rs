//! JSON documents. Every document carries `"schema": 1`.

use num_rational::Ratio;
use peano_core::goldbach::FrakNReport;
use peano_core::kernel::{DiscoveryFailure, Proof, Verdict};
use peano_core::models::{AxiomCheck, LimitRow, ThreeValued};
use peano_core::syntax::{print_wff, Wff};
use serde_json::{json, Map, Value};

use crate::table::{ratio_to_f64, sig12};

pub const SCHEMA: u64 = 1;

fn document(fields: Value) -> Value {
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(rest) = fields {
        doc.extend(rest);
    }
    Value::Object(doc)
}

pub fn ratio_text(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_doc(w: &Wff) -> Value {
    document(json!({ "wff": print_wff(w, false), "sugared": print_wff(w, true) }))
}

pub fn check_doc(proof: &Proof, verdict: &Verdict) -> Value {
    let lines: Vec<Value> = verdict
        .per_line
        .iter()
        .map(|l| match &l.result {
            Ok(()) => json!({ "line": l.line, "ok": true, "error": null }),
            Err(e) => json!({ "line": l.line, "ok": false, "error": e.to_string() }),
        })
        .collect();
    document(json!({
        "theory": proof.theory.name(),
        "accepted": verdict.accepted(),
        "lines": lines,
    }))
}

pub fn discover_doc(theory: &str, result: &Result<Proof, DiscoveryFailure>) -> Value {
    match result {
        Ok(p) => {
            let lines: Vec<Value> = p
                .lines
                .iter()
                .enumerate()
                .map(|(k, l)| {
                    json!({
                        "line": k + 1,
                        "wff": print_wff(&l.wff, false),
                        "justification": l.justification.to_string(),
                    })
                })
                .collect();
            document(json!({ "theory": theory, "discovered": true, "lines": lines, "failures": [] }))
        }
        Err(f) => {
            let failures: Vec<Value> =
                f.unjustified.iter().map(|(line, why)| json!({ "line": line, "error": why.to_string() })).collect();
            document(json!({ "theory": theory, "discovered": false, "lines": [], "failures": failures }))
        }
    }
}

pub fn sentence_doc(w: &Wff, classical: bool) -> Value {
    document(json!({
        "sentence": if classical { "goldbach-classical" } else { "goldbach" },
        "wff": print_wff(w, false),
        "sugared": print_wff(w, true),
    }))
}

pub fn scan_doc(r: &FrakNReport) -> Value {
    let counts: Map<String, Value> = r.partition_counts.iter().map(|(a, c)| (a.to_string(), json!(c))).collect();
    document(json!({
        "limit": r.limit,
        "members": r.members,
        "verified": r.verified,
        "first_failure": r.first_failure,
        "partition_counts": counts,
    }))
}

pub fn partitions_doc(alpha: u64, parts: &[(u64, u64)]) -> Value {
    let pairs: Vec<[u64; 2]> = parts.iter().map(|&(p, q)| [p, q]).collect();
    document(json!({ "alpha": alpha, "partitions": pairs }))
}

fn witness(v: &ThreeValued) -> Value {
    if v.is_unknown() {
        return Value::Null;
    }
    v.trace().iter().map(|(var, i)| json!({ "var": format!("x{var}"), "index": i })).collect()
}

pub fn verdict_fields(v: &ThreeValued) -> Value {
    json!({ "verdict": v.label(), "witness": witness(v) })
}

pub fn axioms_doc(alpha: u64, u: Ratio<u64>, bound: u64, checks: &[AxiomCheck]) -> Value {
    let records: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "axiom": c.axiom, "verdict": c.verdict.label(), "witness": witness(&c.verdict) }))
        .collect();
    document(json!({
        "alpha": alpha,
        "u": ratio_text(u),
        "bound": bound,
        "axioms": records,
    }))
}

pub fn eval_doc(alpha: u64, u: Ratio<u64>, bound: u64, w: &Wff, v: &ThreeValued) -> Value {
    let mut doc = document(json!({
        "alpha": alpha,
        "u": ratio_text(u),
        "bound": bound,
        "wff": print_wff(w, false),
    }));
    if let (Value::Object(d), Value::Object(f)) = (&mut doc, verdict_fields(v)) {
        d.extend(f);
    }
    doc
}

pub fn limits_doc(alpha: u64, rows: &[LimitRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "u": ratio_text(r.u),
                "n": r.n,
                "psi": r.psi.to_string(),
                "psi_value": sig12(r.psi.to_f64(r.u)),
                "deviation": ratio_text(r.deviation),
                "deviation_value": sig12(ratio_to_f64(r.deviation)),
            })
        })
        .collect();
    document(json!({ "alpha": alpha, "rows": rows }))
}
