//! Deterministic report documents.

use serde::Serialize;
use serde_json::{json, Value};
use triclique_core::{Axis, EntitySet, Mrd, Parts, TriContext, Triconcept, Triset};

/// Output of one command. Keys serialise in declaration order; nested maps
/// are sorted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub version: String,
}

impl Report {
    pub fn new(command: String, input_digest: String, result: Value) -> Self {
        Report {
            command,
            input_digest,
            result,
            version: concat!("triclique ", env!("CARGO_PKG_VERSION")).to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialise");
        s.push('\n');
        s
    }
}

pub fn labels(ctx: &TriContext, axis: Axis, p: &Parts) -> Vec<String> {
    ctx.set_labels(axis, &p[axis.index()])
        .into_iter()
        .map(String::from)
        .collect()
}

pub fn triset(ctx: &TriContext, t: &Triset) -> Value {
    let p = t.parts();
    json!({
        "x": labels(ctx, Axis::Object, &p),
        "y": labels(ctx, Axis::Attribute, &p),
        "z": labels(ctx, Axis::Condition, &p),
    })
}

pub fn triconcept(ctx: &TriContext, c: &Triconcept) -> Value {
    let p = c.parts();
    json!({
        "extent": labels(ctx, Axis::Object, &p),
        "intent": labels(ctx, Axis::Attribute, &p),
        "modus": labels(ctx, Axis::Condition, &p),
    })
}

/// Entity set of an encoded context, by plain labels.
pub fn flat(ctx: &TriContext, s: &EntitySet) -> Value {
    json!(ctx.flat_labels(s))
}

/// Entity set of a database, by `type:label`.
pub fn entities(m: &Mrd, s: &EntitySet) -> Value {
    json!(s.iter().map(|e| m.qualified(e)).collect::<Vec<_>>())
}

pub fn set_text(items: &[&str]) -> String {
    format!("{{{}}}", items.join(","))
}

pub fn parts_text(ctx: &TriContext, p: &Parts) -> String {
    ctx.fmt_parts(p)
}
