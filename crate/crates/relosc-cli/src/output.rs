//! Plot-ready CSV/JSON emission with a reproducible metadata block.
//!
//! CSV: `#`-prefixed metadata lines, a header row, then comma-separated rows.
//! JSON: the same schema as one object, keys in a fixed order. Numbers are
//! printed in the shortest representation that round-trips (at most 17
//! significant digits), so parsing the output recovers the exact values.

use std::io::{self, Write};

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

/// Shortest round-trip decimal form.
pub fn fmt_f64(x: f64) -> String {
    debug_assert!(x.is_finite(), "output numbers must be finite");
    format!("{x}")
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt_f64(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => fmt_f64(*x),
            Cell::Text(s) => json_quote(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OutputRecord {
    pub schema: &'static str,
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputRecord {
    pub fn new(schema: &'static str, columns: Vec<&'static str>) -> Self {
        Self {
            schema,
            metadata: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl std::fmt::Display) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn meta_num(&mut self, key: &str, value: f64) {
        self.metadata.push((key.to_string(), fmt_f64(value)));
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "# schema: {}", self.schema)?;
        for (k, v) in &self.metadata {
            writeln!(w, "# {k}: {v}")?;
        }
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    pub fn write_json(&self, w: &mut impl Write) -> io::Result<()> {
        write!(w, "{{\"schema\":{},\"metadata\":{{", json_quote(self.schema))?;
        for (i, (k, v)) in self.metadata.iter().enumerate() {
            if i > 0 {
                write!(w, ",")?;
            }
            write!(w, "{}:{}", json_quote(k), json_quote(v))?;
        }
        write!(w, "}},\"columns\":[")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(w, ",")?;
            }
            write!(w, "{}", json_quote(c))?;
        }
        write!(w, "],\"rows\":[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(w, ",")?;
            }
            let cells: Vec<String> = row.iter().map(Cell::json).collect();
            write!(w, "[{}]", cells.join(","))?;
        }
        writeln!(w, "]}}")
    }
}

fn json_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut r = OutputRecord::new("demo.v1", vec!["n", "value"]);
        r.meta("m", 1);
        r.meta_num("x", 0.1 + 0.2);
        r.push_row(vec![Cell::Int(0), Cell::Num(2f64.sqrt())]);
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# schema: demo.v1\n# m: 1\n# x: 0.30000000000000004\nn,value\n0,1.4142135623730951\n"
        );
        // The printed value parses back bit-exactly.
        assert_eq!("1.4142135623730951".parse::<f64>().unwrap(), 2f64.sqrt());
    }

    #[test]
    fn json_layout() {
        let mut r = OutputRecord::new("demo.v1", vec!["tag"]);
        r.meta("note", "a\"b");
        r.push_row(vec![Cell::Text("x".into())]);
        let mut buf = Vec::new();
        r.write_json(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "{\"schema\":\"demo.v1\",\"metadata\":{\"note\":\"a\\\"b\"},\"columns\":[\"tag\"],\"rows\":[[\"x\"]]}\n"
        );
    }
}
