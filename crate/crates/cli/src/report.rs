//! Report documents: every command produces one, and the renderers turn it
//! into text, CSV, or JSON without any nondeterministic input (no
//! timestamps, no map iteration order surprises, no floats).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// A single table cell. Untagged so the JSON forms are a plain number, a
/// plain array, and a plain string.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    /// Rendering used by the text and CSV formats: integer lists are
    /// space-separated so they stay a single column.
    fn flat(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Ints(vs) => {
                let mut out = String::new();
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    let _ = write!(out, "{v}");
                }
                out
            }
            Cell::Text(s) => s.clone(),
        }
    }
}

/// One titled table. The anchor is a stable machine identifier for the
/// table the block reproduces, safe to grep for across versions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Block {
    pub title: String,
    pub anchor: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Block {
    pub fn new(title: &str, anchor: &str, columns: &[&str]) -> Block {
        Block {
            title: title.to_string(),
            anchor: anchor.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub blocks: Vec<Block>,
}

impl ReportDocument {
    pub fn new(command: &str) -> ReportDocument {
        ReportDocument {
            command: command.to_string(),
            params: BTreeMap::new(),
            blocks: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Text => render_text(doc),
        Format::Csv => render_csv(doc),
        Format::Json => render_json(doc),
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", doc.command);
    for (k, v) in &doc.params {
        let _ = writeln!(out, "{k} = {v}");
    }
    for block in &doc.blocks {
        out.push('\n');
        let _ = writeln!(out, "## {} ({})", block.title, block.anchor);
        let mut widths: Vec<usize> = block.columns.iter().map(|c| c.len()).collect();
        let flat: Vec<Vec<String>> =
            block.rows.iter().map(|r| r.iter().map(Cell::flat).collect()).collect();
        for row in &flat {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut line = String::new();
        for (i, c) in block.columns.iter().enumerate() {
            let _ = write!(line, "{:<width$}  ", c, width = widths[i]);
        }
        let _ = writeln!(out, "{}", line.trim_end());
        for row in &flat {
            line.clear();
            for (i, cell) in row.iter().enumerate() {
                let _ = write!(line, "{:<width$}  ", cell, width = widths[i]);
            }
            let _ = writeln!(out, "{}", line.trim_end());
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for (i, block) in doc.blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "# {} ({})", block.title, block.anchor);
        let header: Vec<String> = block.columns.iter().map(|c| csv_field(c)).collect();
        let _ = writeln!(out, "{}", header.join(","));
        for row in &block.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_field(&c.flat())).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
    }
    out
}

fn render_json(doc: &ReportDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("document serializes");
    out.push('\n');
    out
}
