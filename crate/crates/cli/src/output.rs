//! Table rendering: schema-versioned CSV or a single JSON object.
//!
//! Output is deterministic byte for byte: no timestamps, fixed row order,
//! sorted JSON keys (serde_json's default map), and a fixed float format.

use std::io::Write;
use std::path::Path;

use mml_core::error::{Error, Result};
use serde_json::Value;

/// First line of every CSV emitted by this binary.
pub const SCHEMA_HEADER: &str = "# mml-schema 1";

#[derive(Clone, Debug)]
pub enum Cell {
    F(f64),
    U(u64),
    B(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            // 15 significant digits, '.' decimal separator
            Cell::F(v) => format!("{v:.14e}"),
            Cell::U(v) => v.to_string(),
            Cell::B(v) => v.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::F(v) => float_value(*v),
            Cell::U(v) => Value::from(*v),
            Cell::B(v) => Value::from(*v),
        }
    }
}

/// Non-finite floats have no JSON number form; they surface as strings
/// rather than silently becoming null.
pub fn float_value(v: f64) -> Value {
    match serde_json::Number::from_f64(v) {
        Some(n) => Value::Number(n),
        None => Value::String(format!("{v}")),
    }
}

#[derive(Debug)]
pub struct Table {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Effective configuration, echoed into the JSON object.
    pub echo: Value,
    /// Run-level summary numbers: CSV trailing comments, JSON fields.
    pub notes: Vec<(&'static str, Value)>,
    /// Replaces the flat per-row maps in JSON output when present.
    pub json_rows: Option<Vec<Value>>,
}

impl Table {
    pub fn new(command: &'static str, columns: Vec<&'static str>, echo: Value) -> Self {
        Self {
            command,
            columns,
            rows: Vec::new(),
            echo,
            notes: Vec::new(),
            json_rows: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(SCHEMA_HEADER);
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for (key, value) in &self.notes {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = match &self.json_rows {
            Some(rows) => rows.clone(),
            None => self
                .rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (name, cell) in self.columns.iter().zip(row) {
                        obj.insert((*name).to_string(), cell.json());
                    }
                    Value::Object(obj)
                })
                .collect(),
        };
        let mut top = serde_json::Map::new();
        top.insert("command".into(), Value::from(self.command));
        top.insert("config".into(), self.echo.clone());
        top.insert("rows".into(), Value::Array(rows));
        for (key, value) in &self.notes {
            top.insert((*key).to_string(), value.clone());
        }
        top.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("value tree");
        s.push('\n');
        s
    }
}

pub fn write_rendered(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
                .and_then(|_| lock.flush())
                .map_err(|e| Error::Io(e.to_string()))
        }
    }
}
