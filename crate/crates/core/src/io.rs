//! Text formats for Cayley tables and intuitionistic fuzzy subsets.
//!
//! Cayley tables: `#` comment lines and blank lines are skipped; the first
//! data line is the order `n`, followed by `n` rows of `n` whitespace-separated
//! integers. Fuzzy subsets: one `<index> <mu> <nu>` line per element, grades
//! written as `p/q`, integers or exact decimals.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grade::{parse_rational, Rational};
use crate::ifs::{validate_ifs, IfSubset};
use crate::semigroup::{validate_cayley, Semigroup};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_tables<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Option<Semigroup>> {
    let Some((line, header)) = lines.next() else {
        return Ok(None);
    };
    let order: usize = header
        .parse()
        .map_err(|_| parse_error(line, format!("expected the table order, found {header:?}")))?;
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_error(line, format!("expected {order} table rows")))?;
        let row = text
            .split_whitespace()
            .map(|cell| {
                cell.parse::<i64>()
                    .map_err(|_| parse_error(line, format!("invalid table entry {cell:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        rows.push(row);
    }
    validate_cayley(order, &rows).map(Some)
}

/// Parses exactly one table.
pub fn parse_cayley(text: &str) -> Result<Semigroup> {
    let mut lines = data_lines(text);
    let s = parse_tables(&mut lines)?.ok_or_else(|| parse_error(1, "no table found"))?;
    if let Some((line, _)) = lines.next() {
        return Err(parse_error(line, "unexpected data after the table"));
    }
    Ok(s)
}

/// Parses a sequence of tables, as written by [`format_cayley_stream`].
pub fn parse_cayley_stream(text: &str) -> Result<Vec<Semigroup>> {
    let mut lines = data_lines(text);
    let mut out = Vec::new();
    while let Some(s) = parse_tables(&mut lines)? {
        out.push(s);
    }
    Ok(out)
}

pub fn format_cayley(s: &Semigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Tables separated by blank lines.
pub fn format_cayley_stream<'a>(tables: impl IntoIterator<Item = &'a Semigroup>) -> String {
    tables
        .into_iter()
        .map(format_cayley)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_ifs(text: &str) -> Result<IfSubset> {
    let mut entries: Vec<(usize, usize, Rational, Rational)> = Vec::new();
    for (line, content) in data_lines(text) {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(parse_error(line, "expected `<index> <mu> <nu>`"));
        }
        let index: usize = fields[0]
            .parse()
            .map_err(|_| parse_error(line, format!("invalid element index {:?}", fields[0])))?;
        let grade = |field: &str| {
            parse_rational(field).map_err(|e| match e {
                Error::Parse { message, .. } => parse_error(line, message),
                other => other,
            })
        };
        entries.push((line, index, grade(fields[1])?, grade(fields[2])?));
    }
    let order = entries.len();
    if order == 0 {
        return Err(parse_error(1, "no elements found"));
    }
    let mut mu = vec![None; order];
    let mut nu = vec![Rational::from(0); order];
    for (line, index, m, v) in entries {
        if index >= order {
            return Err(parse_error(line, format!("element {index} is outside 0..{order}")));
        }
        if mu[index].is_some() {
            return Err(parse_error(line, format!("element {index} appears twice")));
        }
        mu[index] = Some(m);
        nu[index] = v;
    }
    let mu: Vec<Rational> = mu.into_iter().map(|m| m.expect("every index seen once")).collect();
    validate_ifs(order, &mu, &nu)
}

/// One line per element with grades in reduced `p/q` form.
pub fn format_ifs(a: &IfSubset) -> String {
    let mut out = String::new();
    for x in 0..a.carrier_order() {
        writeln!(out, "{x} {} {}", a.mu(x), a.nu(x)).expect("writing to a string");
    }
    out
}
