//! JSON encoding of results. Infinities become the strings `"-inf"` and
//! `"+inf"`; finite numbers use the shortest round-trip representation,
//! so decoding a report reproduces every value bit for bit.

use mattol_core::oracle::{Counterexample, OracleVerdict};
use mattol_core::{Interval, IntervalSet, Matrix, PropertyReport, RadiusEstimate};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn number(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        Value::Null
    } else if x > 0.0 {
        json!("+inf")
    } else {
        json!("-inf")
    }
}

/// Inverse of [`number`].
pub fn decode_number(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) if s == "+inf" => Some(f64::INFINITY),
        Value::String(s) if s == "-inf" => Some(f64::NEG_INFINITY),
        _ => None,
    }
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.to_row_major().into_iter().map(number).collect())
}

/// Dimension on the first line, then one row per line, entries in
/// shortest round-trip form.
pub fn canonical_text(m: &Matrix) -> String {
    let mut out = format!("{}\n", m.n());
    for i in 0..m.n() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_sha(m: &Matrix) -> String {
    hex::encode(Sha256::digest(canonical_text(m).as_bytes()))
}

pub fn interval(iv: &Interval) -> Value {
    json!({
        "lo": number(iv.lo),
        "hi": number(iv.hi),
        "lo_closed": iv.lo_closed,
        "hi_closed": iv.hi_closed,
    })
}

/// A single component as an object, anything else as a list.
pub fn interval_set(set: &IntervalSet) -> Value {
    match set.components() {
        [one] => interval(one),
        many => Value::Array(many.iter().map(interval).collect()),
    }
}

pub fn property(r: &PropertyReport) -> Value {
    json!({
        "holds": r.holds,
        "witness": r.witness,
        "near_boundary": r.near_boundary,
    })
}

pub fn radius(est: &RadiusEstimate) -> Value {
    let cert = est.certificate.as_ref();
    json!({
        "lower": number(est.lower),
        "upper": number(est.upper),
        "exact": est.exact,
        "method": est.method,
        "certificate": cert.map_or(Value::Null, |c| matrix(&c.perturbation)),
        "certificate_norm": cert.map_or(Value::Null, |c| number(c.norm)),
        "certificate_attained": cert.map(|c| c.attained),
        "bounds": est.bounds.map_or(Value::Null, |(l, u)| json!([number(l), number(u)])),
        "notes": est.notes,
    })
}

pub fn verdict(v: &OracleVerdict) -> Value {
    let counterexample = match &v.counterexample {
        None => Value::Null,
        Some(Counterexample::Delta(d)) => json!({ "delta": number(*d) }),
        Some(Counterexample::Perturbation(p)) => json!({ "perturbation": matrix(p) }),
    };
    json!({
        "consistent": v.consistent,
        "counterexample": counterexample,
        "detail": v.detail,
    })
}

fn show(v: &Value) -> String {
    match decode_number(v) {
        Some(x) if x == f64::INFINITY => "+inf".into(),
        Some(x) if x == f64::NEG_INFINITY => "-inf".into(),
        Some(x) => format!("{x}"),
        None => v.to_string(),
    }
}

fn show_interval(v: &Value) -> String {
    let open = if v["lo_closed"] == true { '[' } else { '(' };
    let close = if v["hi_closed"] == true { ']' } else { ')' };
    format!("{open}{}, {}{close}", show(&v["lo"]), show(&v["hi"]))
}

/// Human-readable rendering of a report.
pub fn summary(report: &Value) -> String {
    let property = report["property"].as_str().unwrap_or("?");
    let mut lines = Vec::new();
    if let Some(err) = report["error"].as_str() {
        lines.push(format!("error: {err}"));
    }
    let result = &report["result"];
    if let Some(holds) = result["holds"].as_bool() {
        let verdict = if holds { "holds" } else { "does not hold" };
        lines.push(format!("{property}: {verdict} ({})", result["witness"].as_str().unwrap_or("")));
    }
    if !result["interval"].is_null() {
        let parts = match &result["interval"] {
            Value::Array(xs) if xs.is_empty() => "empty".to_string(),
            Value::Array(xs) => xs.iter().map(show_interval).collect::<Vec<_>>().join(" u "),
            one => show_interval(one),
        };
        let kind = if result["exact"] == true { "exact" } else { "inner approximation" };
        lines.push(format!(
            "{property} along {}: delta in {parts} ({kind}, {})",
            result["direction"].as_str().unwrap_or("?"),
            result["method"].as_str().unwrap_or("?"),
        ));
    }
    let r = &result["radius"];
    if !r.is_null() {
        let norm = report["norm"].as_str().unwrap_or("?");
        let value = if r["exact"] == true {
            show(&r["lower"])
        } else {
            format!("in [{}, {}]", show(&r["lower"]), show(&r["upper"]))
        };
        lines.push(format!("{property} radius ({norm}): {value} ({})", r["method"].as_str().unwrap_or("?")));
        if let Value::Array(b) = &r["bounds"] {
            lines.push(format!("  theorem bounds: [{}, {}]", show(&b[0]), show(&b[1])));
        }
        if let Value::Array(notes) = &r["notes"] {
            lines.extend(notes.iter().filter_map(Value::as_str).map(|n| format!("  note: {n}")));
        }
    }
    let o = &report["oracle"];
    if !o.is_null() {
        let status = if o["consistent"] == true { "consistent" } else { "INCONSISTENT" };
        lines.push(format!("oracle: {status}: {}", o["detail"].as_str().unwrap_or("")));
    }
    lines.join("\n")
}
