//! Plain report tables: header-first CSV with LF endings and no quoting, or a
//! JSON array of row objects keyed by the same headers.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{Map, Number, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    UInt(u64),
    /// Arbitrary-size nonnegative integer, kept as decimal digits.
    Big(String),
    Float(f64),
    Bool(bool),
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::UInt(v.into())
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::UInt(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::UInt(v as u64)
    }
}

impl From<i32> for Cell {
    fn from(v: i32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&BigUint> for Cell {
    fn from(v: &BigUint) -> Self {
        match u64::try_from(v) {
            Ok(x) => Cell::UInt(x),
            Err(_) => Cell::Big(v.to_string()),
        }
    }
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            Cell::Int(v) => write!(out, "{v}"),
            Cell::UInt(v) => write!(out, "{v}"),
            Cell::Big(v) => write!(out, "{v}"),
            Cell::Float(v) => write!(out, "{v:.12}"),
            Cell::Bool(v) => write!(out, "{}", u8::from(*v)),
        }
        .unwrap();
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::UInt(v) => Value::from(*v),
            Cell::Big(v) => v.parse::<Number>().map_or_else(|_| Value::String(v.clone()), Value::Number),
            Cell::Float(v) => {
                let mut s = String::new();
                self.render(&mut s);
                s.parse::<Number>().map_or(Value::from(*v), Value::Number)
            }
            Cell::Bool(v) => Value::Bool(*v),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self { headers: headers.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.headers.len(), "row width does not match header");
        self.rows.push(row);
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.render(&mut out);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.headers.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string(&Value::Array(rows)).expect("table serializes");
        s.push('\n');
        s
    }
}
