//! The `cayley v1` text format: a header line, the order, then one row of
//! space-separated 0-based indices per element.

use std::fmt::Write as _;
use std::path::Path;

use tcg_core::{FiniteGroup, GroupError};

pub const HEADER: &str = "cayley v1";

#[derive(Debug, thiserror::Error)]
pub enum CayleyError {
    /// Positions are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid table: {0}")]
    Invalid(GroupError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl From<GroupError> for CayleyError {
    fn from(e: GroupError) -> Self {
        CayleyError::Invalid(e)
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> CayleyError {
    CayleyError::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens of `line` with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split(|c: char| c == ' ' || c == '\t')
        .scan(1usize, |col, tok| {
            let at = *col;
            *col += tok.chars().count() + 1;
            Some((at, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

pub fn parse_cayley(text: &str, name: &str, cap: usize) -> Result<FiniteGroup, CayleyError> {
    let mut lines = text.lines().map(|l| l.strip_suffix('\r').unwrap_or(l)).enumerate().map(|(i, l)| (i + 1, l));

    match lines.next() {
        Some((_, l)) if l.trim_end() == HEADER => {}
        Some((_, l)) => return Err(syntax(1, 1, format!("expected {HEADER:?}, found {:?}", l.trim_end()))),
        None => return Err(syntax(1, 1, "empty file")),
    }

    let (order_line, order_text) = lines.next().ok_or_else(|| syntax(2, 1, "missing order"))?;
    let mut toks = tokens(order_text);
    let (col, tok) = toks.next().ok_or_else(|| syntax(order_line, 1, "missing order"))?;
    let n: usize = tok.parse().map_err(|_| syntax(order_line, col, format!("order {tok:?} is not a number")))?;
    if let Some((col, _)) = toks.next() {
        return Err(syntax(order_line, col, "unexpected text after the order"));
    }
    if n == 0 {
        return Err(GroupError::EmptyTable.into());
    }
    if n > cap {
        return Err(GroupError::OrderCapExceeded { order: n, cap }.into());
    }

    let mut table = Vec::with_capacity(n * n);
    let mut last_line = order_line;
    for row in 0..n {
        let (line, text) = lines.next().ok_or_else(|| syntax(last_line + 1, 1, format!("missing row {row}")))?;
        last_line = line;
        let mut count = 0;
        for (col, tok) in tokens(text) {
            if count == n {
                return Err(syntax(line, col, format!("row {row} has more than {n} entries")));
            }
            let v: usize = tok.parse().map_err(|_| syntax(line, col, format!("{tok:?} is not an index")))?;
            if v >= n {
                return Err(syntax(line, col, format!("index {v} out of range for order {n}")));
            }
            table.push(v as u32);
            count += 1;
        }
        if count < n {
            let end = text.chars().count() + 1;
            return Err(syntax(line, end, format!("row {row} has {count} entries, expected {n}")));
        }
    }
    if let Some((line, text)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        let col = text.len() - text.trim_start().len() + 1;
        return Err(syntax(line, col, "trailing content after the last row"));
    }
    Ok(FiniteGroup::from_flat(name, n, table, cap)?)
}

pub fn write_cayley(g: &FiniteGroup) -> String {
    let mut out = format!("{HEADER}\n{}\n", g.order());
    for row in g.rows() {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn load_cayley(path: &Path, cap: usize) -> Result<FiniteGroup, CayleyError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CayleyError::Io { path: path.display().to_string(), source })?;
    parse_cayley(&text, &format!("file:{}", path.display()), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tcg_core::constructions::{dihedral, m3};

    #[test]
    fn round_trip() {
        for g in [m3().unwrap(), dihedral(10).unwrap()] {
            let text = write_cayley(&g);
            let back = parse_cayley(&text, g.name(), 512).unwrap();
            assert!(back.rows().eq(g.rows()));
            assert_eq!(write_cayley(&back), text);
        }
    }

    #[test]
    fn trivial_group() {
        let g = parse_cayley("cayley v1\n1\n0\n", "one", 512).unwrap();
        assert_eq!(g.order(), 1);
    }

    fn syntax_at(text: &str) -> (usize, usize) {
        match parse_cayley(text, "t", 512) {
            Err(CayleyError::Syntax { line, column, .. }) => (line, column),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics_point_at_the_problem() {
        assert_eq!(syntax_at(""), (1, 1));
        assert_eq!(syntax_at("cayley v2\n2\n"), (1, 1));
        assert_eq!(syntax_at("cayley v1\ntwo\n"), (2, 1));
        assert_eq!(syntax_at("cayley v1\n2 2\n"), (2, 3));
        assert_eq!(syntax_at("cayley v1\n2\n0 1\n1 x\n"), (4, 3));
        assert_eq!(syntax_at("cayley v1\n2\n0 1\n1  2\n"), (4, 4));
        assert_eq!(syntax_at("cayley v1\n2\n0 1 1\n1 0\n"), (3, 5));
        assert_eq!(syntax_at("cayley v1\n2\n0 1\n1\n"), (4, 2));
        assert_eq!(syntax_at("cayley v1\n2\n0 1\n"), (4, 1));
        assert_eq!(syntax_at("cayley v1\n2\n0 1\n1 0\n\n  0\n"), (6, 3));
    }

    #[test]
    fn semantic_failures_are_validation_errors() {
        let not_latin = "cayley v1\n2\n0 1\n1 1\n";
        assert!(matches!(parse_cayley(not_latin, "t", 512), Err(CayleyError::Invalid(GroupError::NotLatinSquare { .. }))));
        assert!(matches!(parse_cayley("cayley v1\n0\n", "t", 512), Err(CayleyError::Invalid(GroupError::EmptyTable))));
        assert!(matches!(
            parse_cayley("cayley v1\n600\n", "t", 512),
            Err(CayleyError::Invalid(GroupError::OrderCapExceeded { order: 600, cap: 512 }))
        ));
    }
}
