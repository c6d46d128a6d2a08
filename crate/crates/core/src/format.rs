//! The `nla 1` text format.
//!
//! ```text
//! nla 1
//! field 2^3
//! arity 3
//! dim 5
//! bracket 2 3 4 = 0x1 e1
//! bracket 1 3 4 = 0x1 e2 + 0x3 e5
//! ```
//!
//! Indices are 1-based and strictly increasing, scalars are `0x` hex, and
//! unlisted brackets are zero. `#` starts a comment; blank lines are ignored.
//! [`emit_algebra`] writes the headers in the order above followed by the
//! nonzero brackets in lexicographic order of their index sets.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::{hex, parse_hex, Field, FieldError};
use crate::matrix::Matrix;

pub const FORMAT_HEADER: &str = "nla 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `{FORMAT_HEADER}` as the first line")]
    MissingHeader,
    #[error("unknown field `{0}`")]
    UnknownField(String),
    #[error("{0} given twice")]
    RepeatedHeader(&'static str),
    #[error("missing `{0}` header before the first bracket")]
    MissingField(&'static str),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("duplicate bracket for indices {0:?}")]
    DuplicateBracket(Vec<usize>),
    #[error("bracket indices must be strictly increasing: {0:?}")]
    NonIncreasingIndices(Vec<usize>),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket needs {expected} indices, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error(transparent)]
    Scalar(FieldError),
    #[error("{0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_algebra(text: &str) -> Result<Algebra, ParseError> {
    let mut lines = content_lines(text).peekable();
    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(FORMAT_HEADER.split_whitespace()) => {}
        Some((no, _)) => return err(no, ParseErrorKind::MissingHeader),
        None => return err(1, ParseErrorKind::MissingHeader),
    }
    let mut field: Option<Field> = None;
    let mut arity: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut last = 1;
    while let Some(&(no, line)) = lines.peek() {
        let mut words = line.split_whitespace();
        let key = words.next().unwrap_or("");
        let value: Vec<&str> = words.collect();
        let single = || -> Result<&str, ParseError> {
            match value.as_slice() {
                [v] => Ok(v),
                _ => syntax(no, format!("`{key}` takes one value")),
            }
        };
        match key {
            "field" => {
                if field.is_some() {
                    return err(no, ParseErrorKind::RepeatedHeader("field"));
                }
                let v = single()?;
                field = Some(v.parse().or_else(|_| err(no, ParseErrorKind::UnknownField(v.to_string())))?);
            }
            "arity" | "dim" => {
                let slot = if key == "arity" { &mut arity } else { &mut dim };
                if slot.is_some() {
                    return err(no, ParseErrorKind::RepeatedHeader(if key == "arity" { "arity" } else { "dim" }));
                }
                let v = single()?;
                *slot = Some(v.parse().or_else(|_| syntax(no, format!("`{v}` is not a number")))?);
            }
            "bracket" => break,
            other => return syntax(no, format!("unexpected `{other}`")),
        }
        last = no;
        lines.next();
    }
    let first_bracket = lines.peek().map_or(last, |&(no, _)| no);
    let field = field.map_or_else(|| err(first_bracket, ParseErrorKind::MissingField("field")), Ok)?;
    let n = arity.map_or_else(|| err(first_bracket, ParseErrorKind::MissingField("arity")), Ok)?;
    let d = dim.map_or_else(|| err(first_bracket, ParseErrorKind::MissingField("dim")), Ok)?;
    Algebra::abelian(n, d, field).or_else(|e| err(last, ParseErrorKind::Shape(e.to_string())))?;

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut entries = Vec::new();
    for (no, line) in lines {
        let Some(rest) = line.strip_prefix("bracket") else {
            return syntax(no, format!("expected a bracket line, got `{line}`"));
        };
        let Some((lhs, rhs)) = rest.split_once('=') else { return syntax(no, "missing `=`") };
        let mut key = Vec::new();
        for w in lhs.split_whitespace() {
            let i: usize = w.parse().or_else(|_| syntax(no, format!("`{w}` is not an index")))?;
            if i == 0 || i > d {
                return err(no, ParseErrorKind::IndexOutOfRange { index: i, dim: d });
            }
            key.push(i);
        }
        if key.len() != n {
            return err(no, ParseErrorKind::WrongArity { expected: n, got: key.len() });
        }
        if key.windows(2).any(|w| w[0] >= w[1]) {
            return err(no, ParseErrorKind::NonIncreasingIndices(key));
        }
        if !seen.insert(key.clone()) {
            return err(no, ParseErrorKind::DuplicateBracket(key));
        }
        let value = parse_vector(field, d, rhs).map_err(|kind| ParseError { line: no, kind })?;
        entries.push((key.iter().map(|i| i - 1).collect::<Vec<_>>(), value));
    }
    Ok(Algebra::from_brackets(n, d, field, entries).expect("keys checked above"))
}

/// `0x1 e2 + 0x3 e5`, or `0`.
fn parse_vector(field: Field, d: usize, text: &str) -> Result<Vec<u8>, ParseErrorKind> {
    let mut v = vec![0u8; d];
    let text = text.trim();
    if text == "0" {
        return Ok(v);
    }
    let mut used = vec![false; d];
    for term in text.split('+') {
        let words: Vec<&str> = term.split_whitespace().collect();
        let [c, e] = words.as_slice() else {
            return Err(ParseErrorKind::Syntax(format!("malformed term `{}`", term.trim())));
        };
        let c = parse_hex(field, c).map_err(ParseErrorKind::Scalar)?;
        let i: usize = e
            .strip_prefix('e')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ParseErrorKind::Syntax(format!("malformed basis vector `{e}`")))?;
        if i == 0 || i > d {
            return Err(ParseErrorKind::IndexOutOfRange { index: i, dim: d });
        }
        if used[i - 1] {
            return Err(ParseErrorKind::Syntax(format!("e{i} appears twice")));
        }
        used[i - 1] = true;
        v[i - 1] = c;
    }
    Ok(v)
}

pub fn emit_algebra(a: &Algebra) -> String {
    let mut out = format!("{FORMAT_HEADER}\nfield {}\narity {}\ndim {}\n", a.field(), a.arity(), a.dim());
    for (key, value) in a.brackets() {
        let idx: Vec<String> = key.iter().map(|i| (i + 1).to_string()).collect();
        let terms: Vec<String> =
            value.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| format!("{} e{}", hex(c), i + 1)).collect();
        writeln!(out, "bracket {} = {}", idx.join(" "), terms.join(" + ")).unwrap();
    }
    out
}

/// Row-major, one row per line, entries as `0x` hex.
pub fn emit_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for r in m.row_vecs() {
        let row: Vec<String> = r.iter().map(|&c| hex(c)).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Inverse of [`emit_matrix`]; rows may also be separated by `;`.
pub fn parse_matrix(field: Field, text: &str) -> Result<Matrix, ParseError> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (no, line) in content_lines(text) {
        for chunk in line.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let row = chunk
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| parse_hex(field, w))
                .collect::<Result<Vec<u8>, _>>()
                .map_err(|e| ParseError { line: no, kind: ParseErrorKind::Scalar(e) })?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return syntax(no, format!("row has {} entries, expected {}", row.len(), first.len()));
                }
            }
            rows.push(row);
        }
    }
    let Some(cols) = rows.first().map(Vec::len) else { return syntax(1, "empty matrix") };
    Ok(Matrix::from_rows(field, cols, &rows))
}
