use cylfuse::modular::format_float;
use cylfuse::{Int, Partition};
use serde_json::{json, Value};

use crate::Format;

/// A command result: JSON document, a flat table for CSV, optional
/// human-readable lines, and the verdict.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub lines: Option<Vec<String>>,
    pub pass: bool,
}

impl Output {
    pub fn new(json: Value, pass: bool) -> Self {
        Output { json, header: Vec::new(), rows: Vec::new(), lines: None, pass }
    }

    pub fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }

    pub fn lines(mut self, lines: Vec<String>) -> Self {
        self.lines = Some(lines);
        self
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => Ok(format!("{}\n", serde_json::to_string(&self.json).map_err(|e| e.to_string())?)),
            Format::Pretty => match &self.lines {
                Some(lines) => Ok(lines.iter().map(|l| format!("{l}\n")).collect()),
                None => Ok(format!("{}\n", serde_json::to_string_pretty(&self.json).map_err(|e| e.to_string())?)),
            },
            Format::Csv => {
                if self.header.is_empty() {
                    return Err("this command has no CSV form".into());
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).map_err(|e| e.to_string())?;
                for r in &self.rows {
                    w.write_record(r).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

/// Integers as JSON numbers when they fit in `i64`, else as strings.
pub fn int(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

/// Floats rounded to twelve significant digits.
pub fn float(x: f64) -> Value {
    let s = format_float(x);
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => json!(v),
        _ => json!(s),
    }
}

pub fn part(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn part_csv(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
