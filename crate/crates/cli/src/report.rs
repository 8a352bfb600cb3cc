//! One record per invocation, rendered as JSON or as aligned text.

use num_traits::ToPrimitive;
use polarweb_core::BigInt;
use serde_json::{Map, Value};

/// Integers of magnitude below `2^53` survive a round trip through an IEEE double.
const SAFE_INTEGER: i64 = 1 << 53;

/// JSON number when exactly representable as a double, decimal string otherwise.
pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) if i.abs() < SAFE_INTEGER => Value::from(i),
        _ => Value::String(v.to_string()),
    }
}

pub fn ints<'a>(vs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(vs.into_iter().map(int).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub verdict: Option<&'static str>,
    pub seed: Option<u64>,
}

impl Record {
    pub fn new(command: &'static str) -> Self {
        Record {
            command,
            inputs: Map::new(),
            results: Map::new(),
            verdict: None,
            seed: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command));
        top.insert("inputs".into(), Value::Object(self.inputs.clone()));
        top.insert("results".into(), Value::Object(self.results.clone()));
        top.insert(
            "verdict".into(),
            self.verdict.map_or(Value::Null, Value::from),
        );
        top.insert("seed".into(), self.seed.map_or(Value::Null, Value::from));
        Value::Object(top)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values");
        s.push('\n');
        s
    }

    /// `key: value` lines; nested objects and arrays of objects are indented.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(self.command);
        out.push('\n');
        write_map(&mut out, &self.inputs, 1);
        write_map(&mut out, &self.results, 1);
        if let Some(v) = self.verdict {
            out.push_str(&format!("  verdict: {v}\n"));
        }
        if let Some(seed) = self.seed {
            out.push_str(&format!("  seed: {seed}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn is_nested(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(Value::is_object),
        _ => false,
    }
}

fn write_map(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (key, value) in map {
        match value {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{key}:\n"));
                write_map(out, inner, depth + 1);
            }
            Value::Array(items) if is_nested(value) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            let line = inner
                                .iter()
                                .map(|(k, v)| format!("{k}={}", scalar(v)))
                                .collect::<Vec<_>>()
                                .join("  ");
                            out.push_str(&format!("{pad}  - {line}\n"));
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other))),
                    }
                }
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
        }
    }
}
