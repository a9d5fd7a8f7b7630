//! Tabular output shared by every subcommand.
//!
//! CSV is UTF-8 with a header row; floats are written as C `%.6e`
//! (`-3.069152e+00`), integers in decimal, empty cells for missing values.
//! JSON is an array of objects with keys in sorted order.

use serde_json::{Map, Number, Value};

use crate::config::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| (*c).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width does not match header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Float values of a column; non-float cells are skipped.
    pub fn floats(&self, name: &str) -> Vec<f64> {
        let Some(i) = self.column(name) else { return Vec::new() };
        self.rows
            .iter()
            .filter_map(|r| match r[i] {
                Cell::Float(v) => Some(v),
                _ => None,
            })
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                // serde_json's default map is ordered by key.
                let map: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(json_cell)).collect();
                Value::Object(map)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(records)).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Int(v) => v.to_string(),
        Cell::Float(v) => format_sci(*v),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Int(v) => Value::from(*v),
        Cell::Float(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Empty => Value::Null,
    }
}

/// `printf("%.6e")`: six fraction digits, signed exponent of at least two digits.
pub fn format_sci(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{v:.6e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_floats() {
        assert_eq!(format_sci(1.23456), "1.234560e+00");
        assert_eq!(format_sci(-3.0691522), "-3.069152e+00");
        assert_eq!(format_sci(2.7e19), "2.700000e+19");
        assert_eq!(format_sci(1e-120), "1.000000e-120");
        assert_eq!(format_sci(0.0), "0.000000e+00");
        assert_eq!(format_sci(9.9999999), "1.000000e+01");
        assert_eq!(format_sci(f64::NAN), "nan");
    }

    #[test]
    fn csv_and_json_layout() {
        let mut t = Table::new(&["omega", "n", "status", "energy_ev"]);
        t.push(vec![2.0.into(), 0u32.into(), "ok".into(), (-3.0).into()]);
        t.push(vec![2.0.into(), 1u32.into(), "no_bound_state".into(), Cell::Empty]);
        assert_eq!(
            t.to_csv(),
            "omega,n,status,energy_ev\n2.000000e+00,0,ok,-3.000000e+00\n2.000000e+00,1,no_bound_state,\n"
        );
        let v: Value = serde_json::from_str(&t.to_json()).unwrap();
        let first = v[0].as_object().unwrap();
        let keys: Vec<&String> = first.keys().collect();
        assert_eq!(keys, ["energy_ev", "n", "omega", "status"]);
        assert!(v[1]["energy_ev"].is_null());
    }
}
