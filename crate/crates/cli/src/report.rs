//! Line-oriented reports with an optional JSON rendering.

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Ordered `key value` records, optionally followed by a raw text body (a dump).
#[derive(Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
    body: Option<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn body(mut self, text: String) -> Self {
        self.body = Some(text);
        self
    }

    /// Arrays of numbers stay on one line; other arrays become one `key item` line per
    /// entry. In text mode, fields are written as
    /// `#` comments when a body follows, so the body can be fed back to the parser.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut map = Map::new();
                for (k, v) in &self.fields {
                    map.insert(k.clone(), v.clone());
                }
                if let Some(b) = &self.body {
                    map.insert("body".into(), Value::String(b.clone()));
                }
                let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("json values serialize");
                out.push('\n');
                out
            }
            Format::Text => {
                let prefix = if self.body.is_some() { "# " } else { "" };
                let mut out = String::new();
                for (k, v) in &self.fields {
                    match v {
                        Value::Array(items) if items.is_empty() || items.iter().any(|i| !i.is_number()) => {
                            for item in items {
                                out.push_str(&format!("{prefix}{k} {}\n", scalar(item)));
                            }
                        }
                        other => out.push_str(&format!("{prefix}{k} {}\n", scalar(other))),
                    }
                }
                if let Some(b) = &self.body {
                    out.push_str(b);
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
