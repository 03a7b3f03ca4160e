//! Plain-text rendering of a [`Report`].

use std::fmt::Write;

use serde_json::Value;

use crate::report::Report;

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn fields(out: &mut String, indent: &str, v: &Value) {
    let Value::Object(m) = v else {
        let _ = writeln!(out, "{indent}{}", text(v));
        return;
    };
    for (k, v) in m {
        match v {
            Value::Array(items) if items.iter().any(Value::is_object) => {
                let _ = writeln!(out, "{indent}{k}:");
                for item in items {
                    let Value::Object(obj) = item else { continue };
                    let parts: Vec<String> = obj.iter().map(|(k, v)| format!("{k}={}", text(v))).collect();
                    let _ = writeln!(out, "{indent}  - {}", parts.join(", "));
                }
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(text).collect();
                let _ = writeln!(out, "{indent}{k}: [{}]", parts.join(", "));
            }
            _ => {
                let _ = writeln!(out, "{indent}{k}: {}", text(v));
            }
        }
    }
}

/// One block per report, ending in a blank line.
pub fn render(r: &Report) -> String {
    let mut out = String::new();
    match r.line {
        Some(n) => {
            let _ = writeln!(out, "[line {n}] {}", r.equation);
        }
        None => {
            let _ = writeln!(out, "{}", r.equation);
        }
    }
    let _ = writeln!(out, "  procedure: {}", r.procedure);
    let _ = writeln!(out, "  status: {}", r.status.as_str());
    if let Some(b) = r.branch {
        let _ = writeln!(out, "  branch: {b}");
    }
    if let Some(reason) = &r.reason {
        let _ = writeln!(out, "  reason: {reason}");
    }
    if let Some(g) = &r.gamma {
        let _ = writeln!(out, "  gamma: {g}");
    }
    for (name, v) in [("witness", &r.witness), ("certificate", &r.certificate), ("hypotheses", &r.hypothesis_report)] {
        if let Some(v) = v {
            let _ = writeln!(out, "  {name}:");
            fields(&mut out, "    ", v);
        }
    }
    if !r.failure_reasons.is_empty() {
        let _ = writeln!(out, "  failed conditions:");
        for f in &r.failure_reasons {
            let _ = writeln!(out, "    - {}", f.detail);
        }
    }
    if let Some(v) = &r.verification {
        let verdict = if v.passed { "passed" } else { "FAILED" };
        let _ = writeln!(out, "  verification: {verdict} ({}; residual {})", v.identity, v.residual);
    }
    if let Some(e) = &r.error {
        match e.offset.filter(|o| !e.message.ends_with(&format!("offset {o}"))) {
            Some(o) => {
                let _ = writeln!(out, "  error ({}): {} [offset {o}]", e.kind, e.message);
            }
            None => {
                let _ = writeln!(out, "  error ({}): {}", e.kind, e.message);
            }
        }
    }
    out.push('\n');
    out
}
