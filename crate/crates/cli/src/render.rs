//! Plain, CSV and JSON encodings. JSON numbers are always decimal strings
//! and object keys come out sorted, so parse-and-reserialize is stable.

use serde_json::{json, Value};
use tnomial_core::identities::Location;
use tnomial_core::IdentityReport;

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn location_json(l: &Location) -> Value {
    json!({
        "n": l.n.to_string(),
        "k": l.k.to_string(),
        "m": l.m.map(|m| m.to_string()),
        "params": l.params.map(|p| p.to_string()),
    })
}

pub fn report_json(r: &IdentityReport) -> Value {
    let (n_max, k_max) = r.range();
    json!({
        "identity": r.identity().name(),
        "params": r.params().to_string(),
        "range": { "n_max": n_max.to_string(), "k_max": k_max.to_string() },
        "status": r.status().name(),
        "expected": r.expected().name(),
        "checked": r.checked().to_string(),
        "failures": r.failures().to_string(),
        "counterexample": r.first_counterexample().map(|c| json!({
            "location": location_json(&c.location),
            "lhs": c.lhs,
            "rhs": c.rhs,
        })),
    })
}

pub fn reports_text(reports: &[IdentityReport], format: crate::cli::Format) -> String {
    use crate::cli::Format;
    let failing = reports.iter().filter(|r| r.is_failure()).count();
    match format {
        Format::Plain => {
            let mut out: String = reports.iter().map(|r| format!("{r}\n")).collect();
            out.push_str(&format!("{} reports, {failing} failing\n", reports.len()));
            out
        }
        Format::Json => json_text(&json!({
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            "summary": { "reports": reports.len().to_string(), "failing": failing.to_string() },
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let c = r.first_counterexample();
                    vec![
                        r.identity().to_string(),
                        r.params().to_string(),
                        r.status().to_string(),
                        r.expected().to_string(),
                        r.checked().to_string(),
                        r.failures().to_string(),
                        c.map(|c| c.location.to_string()).unwrap_or_default(),
                        c.map(|c| c.lhs.clone()).unwrap_or_default(),
                        c.map(|c| c.rhs.clone()).unwrap_or_default(),
                    ]
                })
                .collect();
            csv_text(
                &[
                    "identity", "params", "status", "expected", "checked", "failures", "location",
                    "lhs", "rhs",
                ],
                &rows,
            )
        }
    }
}
