//! Tables written as CSV or JSON with a fixed float format.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::config::Format;
use crate::error::CliResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    /// Floats use 17 significant digits so that values round-trip exactly.
    pub fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) if x.is_finite() => format!("{x:.16e}"),
            Cell::Float(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Float(x) if x.is_finite() => Value::String(self.render()),
            Cell::Float(_) => Value::Null,
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<i64> for Cell {
    fn from(i: i64) -> Self {
        Cell::Int(i)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Column names with a one-line description each, and ordered rows.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<(&'static str, &'static str)>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<(&'static str, &'static str)>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, w: W) -> CliResult<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(self.columns.iter().map(|(n, _)| *n))?;
        for row in &self.rows {
            out.write_record(row.iter().map(Cell::render))?;
        }
        out.flush()?;
        Ok(())
    }

    /// `{"columns": [{"name", "description"}], "rows": [{name: value}]}`; floats
    /// are strings in the CSV format so both outputs agree digit for digit.
    pub fn to_json(&self) -> Value {
        let columns: Vec<Value> =
            self.columns.iter().map(|(n, d)| json!({ "name": n, "description": d })).collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|((n, _), c)| (n.to_string(), c.to_json())).collect();
                Value::Object(obj)
            })
            .collect();
        json!({ "columns": columns, "rows": rows })
    }

    pub fn write(&self, format: Format, path: Option<&Path>) -> CliResult<()> {
        let sink: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        };
        match format {
            Format::Csv => self.write_csv(sink),
            Format::Json => {
                let mut sink = sink;
                serde_json::to_writer_pretty(&mut sink, &self.to_json()).map_err(io::Error::from)?;
                writeln!(sink)?;
                sink.flush()?;
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering_round_trips() {
        for x in [0.1, -1.0 / 3.0, 6.02e23, 5e-324] {
            let s = Cell::Float(x).render();
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
        assert_eq!(Cell::Float(f64::NAN).render(), "NaN");
    }

    #[test]
    fn csv_and_json_agree() {
        let mut t = Table::new(vec![("a", "first"), ("b", "second")]);
        t.push(vec![Cell::from(1.5), Cell::from(true)]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1.5000000000000000e0,true\n");
        assert_eq!(t.to_json()["rows"][0]["a"], "1.5000000000000000e0");
        assert_eq!(t.to_json()["columns"][1]["description"], "second");
    }
}
