//! Rendering of command results and where they are written.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use conical::report::{format_f64, to_csv, to_json, ReportDocument, SCHEMA_VERSION};
use conical::verify::{Status, VerificationReport};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Null,
}

impl Cell {
    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Null => Value::Null,
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_f64(*v),
            Cell::Text(s) => s.clone(),
            Cell::Null => String::new(),
        }
    }
}

/// A table of evaluated values, one row per grid point.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Set when a row could not be evaluated.
    pub failed: bool,
}

pub enum Payload {
    Reports(Vec<VerificationReport>),
    Table(Table),
}

impl Payload {
    pub fn has_failure(&self) -> bool {
        match self {
            Payload::Reports(reports) => reports.iter().any(|r| r.status == Status::Fail),
            Payload::Table(t) => t.failed,
        }
    }

    pub fn render(&self, config: Value, format: Format) -> Result<String, String> {
        let text = match (self, format) {
            (Payload::Reports(reports), Format::Json) => to_json(&ReportDocument::new(config, reports.clone())),
            (Payload::Reports(reports), Format::Csv) => to_csv(reports),
            (Payload::Table(t), Format::Json) => to_json(&table_json(t, config)),
            (Payload::Table(t), Format::Csv) => return table_csv(t),
        };
        text.map_err(|e| e.to_string())
    }
}

fn table_json(t: &Table, config: Value) -> Value {
    let rows = t
        .rows
        .iter()
        .map(|row| {
            let record: Map<String, Value> =
                t.columns.iter().zip(row).map(|(col, cell)| (col.to_string(), cell.json())).collect();
            Value::Object(record)
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("version".into(), Value::from(SCHEMA_VERSION));
    doc.insert("config".into(), config);
    doc.insert("rows".into(), Value::Array(rows));
    Value::Object(doc)
}

fn table_csv(t: &Table) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&t.columns).map_err(|e| e.to_string())?;
    for row in &t.rows {
        w.write_record(row.iter().map(Cell::csv)).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// The file named by `--output`, else `<dir>/<command>.<ext>` under the
/// output directory, else standard output (`None`).
pub fn destination(output: Option<&Path>, dir: Option<&Path>, command: &str, format: Format) -> Option<PathBuf> {
    output
        .map(Path::to_path_buf)
        .or_else(|| dir.map(|d| d.join(format!("{command}.{}", format.extension()))))
}

pub fn write(text: &str, dest: Option<&Path>) -> Result<(), String> {
    match dest {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
            }
            fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}
