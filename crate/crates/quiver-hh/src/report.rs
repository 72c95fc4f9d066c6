//! Report assembly and emission: a fixed-order JSON schema and a plain-text
//! rendering, both byte-deterministic for a given input and option set.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::Algebra;

/// Comment- and whitespace-insensitive view of a presentation file: strip
/// `#` comments, trim lines, drop blanks, join with newlines.
pub fn normalize_quiver_text(text: &str) -> String {
    text.lines()
        .map(|line| match line.find('#') {
            Some(i) => line[..i].trim(),
            None => line.trim(),
        })
        .filter(|line| !line.is_empty())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Hex SHA-256 of the normalized file content.
pub fn input_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(normalize_quiver_text(text).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn algebra_summary(algebra: &Algebra) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), json!(algebra.dim()));
    m.insert("nilpotency".into(), json!(algebra.nilpotency()));
    m.insert("monomial".into(), json!(algebra.is_monomial()));
    m.insert(
        "vertices".into(),
        json!(algebra.quiver().vertex_count()),
    );
    m.insert("arrows".into(), json!(algebra.quiver().arrows().len()));
    Value::Object(m)
}

/// One tool invocation's outcome. Keys are emitted in declaration order.
#[derive(Clone, Debug)]
pub struct Report {
    pub version: String,
    pub input_digest: Option<String>,
    pub algebra: Value,
    pub command: Value,
    pub results: Value,
    pub timing_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("version".into(), json!(self.version));
        m.insert(
            "input_digest".into(),
            match &self.input_digest {
                Some(d) => json!(d),
                None => Value::Null,
            },
        );
        m.insert("algebra".into(), self.algebra.clone());
        m.insert("command".into(), self.command.clone());
        m.insert("results".into(), self.results.clone());
        m.insert("timing_ms".into(), json!(self.timing_ms as u64));
        Value::Object(m)
    }

    pub fn emit_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_json()).expect("valid JSON tree");
        out.push('\n');
        out
    }

    pub fn emit_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("quiver-hh {}\n", self.version));
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("input digest: {d}\n"));
        }
        if let Value::Object(a) = &self.algebra {
            let line: Vec<String> = a.iter().map(|(k, v)| format!("{k} {v}")).collect();
            out.push_str(&format!("algebra: {}\n", line.join(", ")));
        }
        out.push_str(&format!("command: {}\n", compact(&self.command)));
        out.push_str("results:\n");
        render_value(&self.results, 1, &mut out);
        out.push_str(&format!("time: {} ms\n", self.timing_ms));
        out
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("valid JSON tree")
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                match inner {
                    Value::Object(_) | Value::Array(_) if !is_short(inner) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(inner, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", compact(inner))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_short(item) {
                    out.push_str(&format!("{pad}- {}\n", compact(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", compact(other))),
    }
}

fn is_short(v: &Value) -> bool {
    compact(v).len() <= 72
}
