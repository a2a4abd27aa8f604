//! Machine output rendering. Both formats are assembled by hand so the byte
//! stream is fully pinned: CSV is comma-separated with a header row and LF
//! line endings; JSON is a single-line array of flat objects. Numbers are
//! printed with Rust's shortest round-trip formatting, so
//! `parse(print(x)) == x` for every value emitted.

use std::fmt::Write as _;

/// One cell of a record.
#[derive(Debug, Clone)]
pub enum Value {
    Str(&'static str),
    Int(usize),
    F64(f64),
}

impl Value {
    fn render_csv(&self, out: &mut String) {
        match self {
            Value::Str(s) => out.push_str(s),
            Value::Int(n) => {
                let _ = write!(out, "{n}");
            }
            Value::F64(x) => {
                let _ = write!(out, "{x}");
            }
        }
    }

    fn render_json(&self, out: &mut String) {
        match self {
            // Field values here are fixed tokens (method and check names,
            // pass/fail), never free text needing escapes.
            Value::Str(s) => {
                let _ = write!(out, "\"{s}\"");
            }
            Value::Int(n) => {
                let _ = write!(out, "{n}");
            }
            Value::F64(x) => {
                let _ = write!(out, "{x}");
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Renders rows that all share `header`'s shape. CSV always includes the
/// header line, so an empty result still prints its schema.
pub fn render(format: Format, header: &[&'static str], rows: &[Vec<Value>]) -> String {
    for row in rows {
        assert_eq!(row.len(), header.len(), "row shape mismatch");
    }
    match format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    cell.render_csv(&mut out);
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = String::from("[");
            for (r, row) in rows.iter().enumerate() {
                if r > 0 {
                    out.push(',');
                }
                out.push('{');
                for (i, (key, cell)) in header.iter().zip(row).enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "\"{key}\":");
                    cell.render_json(&mut out);
                }
                out.push('}');
            }
            out.push_str("]\n");
            out
        }
    }
}
