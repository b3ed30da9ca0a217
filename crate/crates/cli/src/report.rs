//! Run reports: deterministic JSON (sorted keys, sorted result lists, every
//! numeric value an exact decimal or `num/den` string) with an optional flat
//! CSV rendering and an append-only JSON-lines summary cache.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<Value>,
    pub findings: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            findings: Vec::new(),
            elapsed_ms: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn push_result(&mut self, value: impl Serialize) {
        self.results
            .push(serde_json::to_value(value).expect("report values serialize"));
    }

    pub fn push_finding(&mut self, value: impl Serialize) {
        self.findings
            .push(serde_json::to_value(value).expect("report values serialize"));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flat CSV of the result records (the findings table when there are no
    /// results, as in an audit of an empty solution set). Columns are the
    /// sorted union of the record keys.
    pub fn to_csv(&self) -> String {
        let rows = if self.results.is_empty() && !self.findings.is_empty() {
            &self.findings
        } else {
            &self.results
        };
        let mut columns: Vec<String> = Vec::new();
        let mut flattened: Vec<BTreeMap<String, String>> = Vec::new();
        for row in rows {
            let mut flat = BTreeMap::new();
            flatten_value("", row, &mut flat);
            for key in flat.keys() {
                if !columns.contains(key) {
                    columns.push(key.clone());
                }
            }
            flattened.push(flat);
        }
        columns.sort();
        let mut out = String::new();
        out.push_str(&columns.join(","));
        out.push('\n');
        for flat in &flattened {
            let row: Vec<String> = columns
                .iter()
                .map(|c| csv_escape(flat.get(c).map(String::as_str).unwrap_or("")))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// One-line summary appended to the JSON-lines cache file.
    pub fn append_cache(&self, path: &Path) -> std::io::Result<()> {
        #[derive(Serialize)]
        struct CacheLine<'a> {
            command: &'a str,
            inputs: &'a BTreeMap<String, String>,
            result_count: usize,
            finding_count: usize,
            version: &'a str,
        }
        let line = serde_json::to_string(&CacheLine {
            command: &self.command,
            inputs: &self.inputs,
            result_count: self.results.len(),
            finding_count: self.findings.len(),
            version: &self.version,
        })
        .expect("cache line serializes");
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(file, "{line}")
    }
}

fn flatten_value(prefix: &str, value: &Value, out: &mut BTreeMap<String, String>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_value(&key, v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten_value(&format!("{prefix}[{i}]"), v, out);
            }
        }
        Value::Null => {
            out.insert(prefix.to_string(), String::new());
        }
        Value::Bool(b) => {
            out.insert(prefix.to_string(), b.to_string());
        }
        Value::Number(n) => {
            out.insert(prefix.to_string(), n.to_string());
        }
        Value::String(s) => {
            out.insert(prefix.to_string(), s.clone());
        }
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
