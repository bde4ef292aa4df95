//! Deterministic CSV, Markdown and plain-text tables.
//!
//! Numbers are printed with a fixed number of decimals, rounding half away from
//! zero on the exact binary value, so output does not depend on platform or
//! locale.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Number(f64),
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

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Number(x)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(
        title: impl Into<String>,
        header: impl IntoIterator<Item = S>,
    ) -> Self {
        Table {
            title: title.into(),
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
    Plain,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "plain" => Ok(TableFormat::Plain),
            other => Err(Error::Config(format!(
                "unknown format '{other}' (expected csv, md or plain)"
            ))),
        }
    }
}

/// Formats `x` with `precision` decimals, rounding ties away from zero.
///
/// Never prints a negative zero.
pub fn format_fixed(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    // 1100 fractional digits is enough to print any f64 exactly.
    let exact = format!("{:.1100}", x.abs());
    let (int_part, frac_part) = exact.split_once('.').expect("fixed notation has a point");
    let mut digits: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes().take(precision))
        .collect();
    if frac_part.as_bytes()[precision] >= b'5' {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let split = digits.len() - precision;
    let mut out = String::with_capacity(digits.len() + 2);
    if x.is_sign_negative() && digits.iter().any(|&d| d != b'0') {
        out.push('-');
    }
    out.push_str(std::str::from_utf8(&digits[..split]).expect("ascii"));
    if precision > 0 {
        out.push('.');
        out.push_str(std::str::from_utf8(&digits[split..]).expect("ascii"));
    }
    out
}

fn render(cell: &Cell, precision: usize) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Number(x) => format_fixed(*x, precision),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_field(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Renders a table. CSV output omits the title; the other formats print it on
/// the first line followed by a blank line.
pub fn emit_table(table: &Table, format: TableFormat, precision: usize) -> String {
    let body: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| row.iter().map(|c| render(c, precision)).collect())
        .collect();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .map(|c| csv_field(c))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(out, "{}", line(&table.header)).unwrap();
            for row in &body {
                writeln!(out, "{}", line(row)).unwrap();
            }
        }
        TableFormat::Markdown => {
            if !table.title.is_empty() {
                writeln!(out, "{}\n", table.title).unwrap();
            }
            let line = |cells: &[String]| {
                format!(
                    "| {} |",
                    cells
                        .iter()
                        .map(|c| md_field(c))
                        .collect::<Vec<_>>()
                        .join(" | ")
                )
            };
            writeln!(out, "{}", line(&table.header)).unwrap();
            let rule: Vec<String> = table.header.iter().map(|_| "---".to_string()).collect();
            writeln!(out, "|{}|", rule.join("|")).unwrap();
            for row in &body {
                writeln!(out, "{}", line(row)).unwrap();
            }
        }
        TableFormat::Plain => {
            if !table.title.is_empty() {
                writeln!(out, "{}\n", table.title).unwrap();
            }
            let columns = body
                .iter()
                .map(Vec::len)
                .chain([table.header.len()])
                .max()
                .unwrap_or(0);
            let mut widths = vec![0; columns];
            for row in body.iter().chain([&table.header]) {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let numeric = |i: usize| {
                table
                    .rows
                    .iter()
                    .any(|r| matches!(r.get(i), Some(Cell::Number(_))))
            };
            let mut line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if numeric(i) {
                            format!("{c:>w$}", w = widths[i])
                        } else {
                            format!("{c:<w$}", w = widths[i])
                        }
                    })
                    .collect();
                writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
            };
            line(&table.header);
            for row in &body {
                line(row);
            }
        }
    }
    out
}
