use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub micros: u64,
}

/// What every command prints, as aligned text or as JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub timing: Timing,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    #[cfg(test)]
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Scalars as aligned `key  value` rows, lists one item per line.
    pub fn to_text(&self) -> String {
        let sections = [&self.inputs, &self.results];
        let width = sections
            .iter()
            .flat_map(|m| m.keys())
            .map(|k| k.chars().count())
            .chain(["command".len(), "time".len()])
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        let row = |out: &mut String, key: &str, value: &str| {
            let _ = writeln!(out, "{key:<width$}  {value}");
        };
        row(&mut out, "command", &self.command);
        for section in sections {
            for (key, value) in section {
                match value {
                    Value::Array(items) if !items.iter().all(is_word) => {
                        let _ = writeln!(out, "{key} ({}):", items.len());
                        for item in items {
                            let _ = writeln!(out, "  {}", inline(item));
                        }
                    }
                    other => row(&mut out, key, &inline(other)),
                }
            }
        }
        row(
            &mut out,
            "time",
            &format!("{:.3} ms", self.timing.micros as f64 / 1000.0),
        );
        out
    }
}

/// Short enough to print on the same row as its key.
fn is_word(value: &Value) -> bool {
    match value {
        Value::String(s) => !s.contains(char::is_whitespace),
        Value::Array(_) | Value::Object(_) => false,
        _ => true,
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("{{{}}}", parts.join(", "))
        }
        Value::Object(fields) => fields
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut inputs = Map::new();
        inputs.insert("file".into(), json!("mk4.json"));
        let mut results = Map::new();
        results.insert("rank".into(), json!(3));
        results.insert("components".into(), json!([["ab", "ac"], ["bc"]]));
        results.insert("basis".into(), json!(["ab", "ac"]));
        results.insert("witness".into(), Value::Null);
        Report {
            command: "info".into(),
            inputs,
            results,
            timing: Timing { micros: 1500 },
        }
    }

    #[test]
    fn json_round_trip_is_idempotent() {
        let text = sample().to_json();
        let parsed = Report::from_json(&text).unwrap();
        assert_eq!(parsed, sample());
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn text_is_aligned() {
        let text = sample().to_text();
        assert!(text.starts_with("command     info\n"));
        assert!(text.contains("rank        3\n"));
        assert!(text.contains("components (2):\n  {ab, ac}\n  {bc}\n"));
        assert!(text.contains("basis       {ab, ac}\n"));
        assert!(text.contains("witness     -\n"));
        assert!(text.ends_with("time        1.500 ms\n"));
    }
}
