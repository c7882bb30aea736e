//! Tabular experiment output with deterministic CSV and JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Significant digits used for every floating-point value written out.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl Value {
    fn csv_field(&self) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Float(x) => format_float(*x),
            Value::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Value::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Int(i) => serde_json::Value::from(*i),
            Value::Float(x) => serde_json::Number::from_f64(round_significant(*x))
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null),
            Value::Text(s) => serde_json::Value::from(s.as_str()),
        }
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_significant(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Shortest text that round-trips the value rounded to 12 significant
/// digits; plain notation for moderate magnitudes, exponent otherwise.
pub fn format_float(x: f64) -> String {
    let r = round_significant(x);
    if r == 0.0 {
        return "0".into();
    }
    let mag = r.abs();
    if (1e-4..1e12).contains(&mag) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// A finished run: column names, rows, scalar summary values and the
/// parameters that produced it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExperimentResult {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub summary: BTreeMap<String, f64>,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    command: &'a str,
    version: &'a str,
    parameters: &'a BTreeMap<String, String>,
    columns: &'a [String],
    rows: Vec<Vec<serde_json::Value>>,
    summary: BTreeMap<&'a str, serde_json::Value>,
}

impl ExperimentResult {
    pub fn new(command: impl Into<String>, columns: &[&str]) -> Self {
        ExperimentResult {
            command: command.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_owned(), value.to_string());
        self
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set_summary(&mut self, key: &str, value: f64) {
        self.summary.insert(key.to_owned(), value);
    }

    /// Header row plus one line per row, `\n`-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Value::csv_field).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
        out
    }

    /// Same payload as the CSV plus run metadata.
    pub fn to_json(&self, version: &str) -> String {
        let doc = JsonDoc {
            command: &self.command,
            version,
            parameters: &self.parameters,
            columns: &self.columns,
            rows: self.rows.iter().map(|r| r.iter().map(Value::json).collect()).collect(),
            summary: self
                .summary
                .iter()
                .map(|(k, v)| (k.as_str(), Value::Float(*v).json()))
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }
}
