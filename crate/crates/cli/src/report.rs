//! Output rendering: every command produces the same numbers in JSON,
//! CSV, and human-table form.

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

pub struct Output {
    pub json: Value,
    pub csv: String,
    pub table: String,
}

impl Output {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => format!("{:#}\n", self.json),
            OutputFormat::Csv => self.csv.clone(),
            OutputFormat::Table => self.table.clone(),
        }
    }
}

/// Microsecond values print with four fractional digits in tables.
pub fn fmt_value(v: &Value) -> String {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    return format!("{f:.4}");
                }
            }
            n.to_string()
        }
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Single-record report: one JSON object, a two-line CSV, an aligned
/// key/value table.
pub fn kv_output(pairs: Vec<(&str, Value)>) -> Output {
    let json = Value::Object(
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
    );
    let mut csv = pairs
        .iter()
        .map(|(k, _)| k.to_string())
        .collect::<Vec<_>>()
        .join(",");
    csv.push('\n');
    csv.push_str(
        &pairs
            .iter()
            .map(|(_, v)| csv_cell(v))
            .collect::<Vec<_>>()
            .join(","),
    );
    csv.push('\n');
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut table = String::new();
    for (k, v) in &pairs {
        table.push_str(&format!("{k:width$}  {}\n", fmt_value(v)));
    }
    Output { json, csv, table }
}

/// Multi-row report: JSON array of objects, CSV with a header row, an
/// aligned column table.
pub fn rows_output(headers: &[&str], rows: Vec<Vec<Value>>) -> Output {
    let json = Value::Array(
        rows.iter()
            .map(|row| {
                Value::Object(
                    headers
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.to_string(), v.clone()))
                        .collect(),
                )
            })
            .collect(),
    );

    let mut csv = headers.join(",");
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.iter().map(csv_cell).collect::<Vec<_>>().join(","));
        csv.push('\n');
    }

    let rendered: Vec<Vec<String>> = rows
        .iter()
        .map(|row| row.iter().map(fmt_value).collect())
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rendered {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut table = String::new();
    for (i, h) in headers.iter().enumerate() {
        table.push_str(&format!("{:width$}  ", h, width = widths[i]));
    }
    table.push('\n');
    for row in &rendered {
        for (i, cell) in row.iter().enumerate() {
            table.push_str(&format!("{:width$}  ", cell, width = widths[i]));
        }
        table.push('\n');
    }
    Output { json, csv, table }
}

pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn int(v: u64) -> Value {
    Value::Number(v.into())
}

pub fn text(v: impl Into<String>) -> Value {
    Value::String(v.into())
}
