use anyhow::Result;
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// A command result: the JSON document, its rows (header first), and an optional text report.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub rows: Vec<Vec<String>>,
    pub text: Option<String>,
}

impl Output {
    pub fn new(json: Value, rows: Vec<Vec<String>>) -> Self {
        Output { json, rows, text: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                for r in &self.rows {
                    w.write_record(r)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::Table => Ok(self.text.clone().unwrap_or_else(|| aligned(&self.rows))),
        }
    }
}

pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = width[c])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Table with a header of degrees and one row per quantity.
pub fn degree_table(label: &str, degrees: &[u32], rows: &[(&str, Vec<usize>)]) -> Vec<Vec<String>> {
    let mut out = vec![std::iter::once(label.to_string()).chain(degrees.iter().map(|d| d.to_string())).collect()];
    for (name, vals) in rows {
        out.push(std::iter::once(name.to_string()).chain(vals.iter().map(|v| v.to_string())).collect());
    }
    out
}
