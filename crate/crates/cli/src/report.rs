use std::fmt::Write;

use monopol::parse::format_ideal;
use monopol::{Monomial, MonomialIdeal, MonomialPrime, Ring, SimplicialComplex, VertexSet};
use serde_json::{json, Map, Value};

/// Everything a command produces besides timing.
pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub verdict: Option<String>,
    pub witness: Value,
}

impl Outcome {
    pub fn new(inputs: Value, results: Value) -> Self {
        Outcome {
            inputs,
            results,
            verdict: None,
            witness: Value::Null,
        }
    }

    pub fn verdict(mut self, verdict: &str) -> Self {
        self.verdict = Some(verdict.to_string());
        self
    }

    pub fn witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    pub fn failed(&self) -> bool {
        self.verdict.as_deref() == Some("fail")
    }

    pub fn document(self, command: &str, elapsed_ms: u128) -> Value {
        json!({
            "command": command,
            "inputs": self.inputs,
            "results": self.results,
            "verdict": self.verdict,
            "witness": self.witness,
            "elapsed_ms": elapsed_ms as u64,
        })
    }
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    let mut gens = i.display_generators();
    gens.sort();
    json!({
        "ring": i.ring().names(),
        "generators": gens,
        "text": format_ideal(i),
    })
}

pub fn monomial(m: &Monomial, ring: &Ring) -> Value {
    Value::String(m.display(ring))
}

pub fn monomials(ms: &[Monomial], ring: &Ring) -> Value {
    let mut out: Vec<String> = ms.iter().map(|m| m.display(ring)).collect();
    out.sort();
    json!(out)
}

pub fn prime(p: &MonomialPrime) -> Value {
    Value::String(p.to_string())
}

pub fn primes<'a>(ps: impl IntoIterator<Item = &'a MonomialPrime>) -> Value {
    Value::Array(ps.into_iter().map(prime).collect())
}

pub fn face(f: &VertexSet, ring: &Ring) -> Value {
    Value::String(f.display(ring))
}

pub fn faces(fs: &[VertexSet], ring: &Ring) -> Value {
    Value::Array(fs.iter().map(|f| face(f, ring)).collect())
}

pub fn complex(c: &SimplicialComplex) -> Value {
    json!({
        "vertices": c.vertices().names(),
        "facets": faces(c.facets(), c.vertices()),
    })
}

/// Plain-text rendering of a report document, key by key.
pub fn human(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = doc {
        write_map(&mut out, map, 0);
    }
    out
}

fn write_map(out: &mut String, map: &Map<String, Value>, depth: usize) {
    for (key, value) in map {
        write_entry(out, key, value, depth);
    }
}

fn write_entry(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(inner) if inner.is_empty() => {
            let _ = writeln!(out, "{pad}{key}: {{}}");
        }
        Value::Object(inner) => {
            let _ = writeln!(out, "{pad}{key}:");
            write_map(out, inner, depth + 1);
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let items: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", items.join("; "));
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{key}:");
            for item in items {
                match item {
                    Value::Object(inner) => {
                        let _ = writeln!(out, "{pad}  -");
                        write_map(out, inner, depth + 2);
                    }
                    other => write_entry(out, "-", other, depth + 1),
                }
            }
        }
        scalar_value => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar(scalar_value));
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        other => other.to_string(),
    }
}
