//! The output record emitted by every subcommand, and its three renderings.
//!
//! A record serializes losslessly to JSON, and the default rendering (no
//! timing) is byte-identical across runs for identical inputs. In csv mode
//! the rows are the payload on stdout; verdicts and totals go to stderr.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone, Default)]
pub struct Row {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn new(check: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass, detail: Some(detail.into()) }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub rows: Vec<Row>,
    pub totals: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        OutputRecord {
            command: command.into(),
            params: BTreeMap::new(),
            rows: Vec::new(),
            totals: BTreeMap::new(),
            verdicts: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<serde_json::Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn total(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.totals.insert(key.to_string(), value.to_string());
        self
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// The canonical column order for tabular renderings.
const COLUMNS: &[&str] = &[
    "m", "weight", "mult", "dim_left", "dim_right", "dim", "oracle", "formula", "node", "status",
];

fn cell(row: &Row, column: &str) -> Option<String> {
    match column {
        "m" => row.m.map(|v| v.to_string()),
        "weight" => row.weight.as_ref().map(format_weight),
        "mult" => row.mult.map(|v| v.to_string()),
        "dim" => row.dim.clone(),
        "dim_left" => row.dim_left.clone(),
        "dim_right" => row.dim_right.clone(),
        "oracle" => row.oracle.clone(),
        "formula" => row.formula.clone(),
        "node" => row.node.map(|v| v.to_string()),
        "status" => row.status.clone(),
        _ => None,
    }
}

pub fn format_weight(parts: &Vec<u32>) -> String {
    let inner: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn populated_columns(rows: &[Row]) -> Vec<&'static str> {
    COLUMNS
        .iter()
        .copied()
        .filter(|c| rows.iter().any(|r| cell(r, c).is_some()))
        .collect()
}

/// Render the record to stdout (and diagnostics to stderr in csv mode).
pub fn render(record: &OutputRecord, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(record).expect("record serializes"));
        }
        Format::Text => print!("{}", render_text(record)),
        Format::Csv => {
            let cols = populated_columns(&record.rows);
            println!("{}", cols.join(","));
            for row in &record.rows {
                let cells: Vec<String> = cols
                    .iter()
                    .map(|c| csv_escape(&cell(row, c).unwrap_or_default()))
                    .collect();
                println!("{}", cells.join(","));
            }
            for (key, value) in &record.totals {
                eprintln!("total {key} = {value}");
            }
            for v in &record.verdicts {
                eprintln!("{}", verdict_line(v));
            }
        }
    }
}

fn verdict_line(v: &Verdict) -> String {
    let tag = if v.pass { "PASS" } else { "FAIL" };
    match &v.detail {
        Some(d) => format!("{tag} {} ({d})", v.check),
        None => format!("{tag} {}", v.check),
    }
}

fn render_text(record: &OutputRecord) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let params: Vec<String> = record
        .params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect();
    writeln!(out, "command: {} {}", record.command, params.join(" ")).unwrap();
    if !record.rows.is_empty() {
        let cols = populated_columns(&record.rows);
        let mut table: Vec<Vec<String>> = vec![cols.iter().map(|c| c.to_string()).collect()];
        for row in &record.rows {
            table.push(cols.iter().map(|c| cell(row, c).unwrap_or_default()).collect());
        }
        let widths: Vec<usize> = (0..cols.len())
            .map(|i| table.iter().map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        for line in &table {
            let padded: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            writeln!(out, "  {}", padded.join("  ").trim_end()).unwrap();
        }
    }
    for (key, value) in &record.totals {
        writeln!(out, "{key} = {value}").unwrap();
    }
    for v in &record.verdicts {
        writeln!(out, "{}", verdict_line(v)).unwrap();
    }
    if let Some(ms) = record.elapsed_ms {
        writeln!(out, "elapsed_ms = {ms}").unwrap();
    }
    out
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut record = OutputRecord::new("dims");
        record.param("n", 2).param("k", 1);
        record.rows.push(Row { m: Some(0), dim: Some("1".into()), ..Default::default() });
        record.total("zhu", "5");
        record.verdicts.push(Verdict::new("recursion", true, "all degrees"));
        let text = serde_json::to_string(&record).unwrap();
        let parsed: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, record);
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("[2,1]"), "\"[2,1]\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn weight_formatting() {
        assert_eq!(format_weight(&vec![2, 1]), "[2,1]");
        assert_eq!(format_weight(&vec![]), "[]");
    }
}
