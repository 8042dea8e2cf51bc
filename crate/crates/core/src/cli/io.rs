//! Matrix interchange formats.
//!
//! JSON: `{ "dim": m, "entries": [[re, im], ...] }` with `m²` pairs in
//! row-major order. Floats round-trip bit-exactly.
//!
//! Text grid: one matrix row per line, whitespace-separated tokens such as
//! `2-4i`, `-4+4i`, `5i`, `-i` or `3`. Blank lines and `#` comments are
//! ignored.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexScalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixFile {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            dim: m.dim(),
            entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

fn parse_err(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        field: field.into(),
        message: message.into(),
    }
}

pub fn parse_json(text: &str) -> Result<ComplexMatrix> {
    let value: Value = serde_json::from_str(text).map_err(|e| parse_err("document", e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| parse_err("document", "expected a JSON object"))?;
    let dim = obj
        .get("dim")
        .ok_or_else(|| parse_err("dim", "missing"))?
        .as_u64()
        .filter(|&d| d >= 1)
        .ok_or_else(|| parse_err("dim", "expected a positive integer"))? as usize;
    let entries = obj
        .get("entries")
        .ok_or_else(|| parse_err("entries", "missing"))?
        .as_array()
        .ok_or_else(|| parse_err("entries", "expected an array"))?;
    let expected = dim.checked_mul(dim).ok_or_else(|| parse_err("dim", "too large"))?;
    if entries.len() != expected {
        return Err(parse_err(
            "entries",
            format!("expected {expected} entries for dim {dim}, got {}", entries.len()),
        ));
    }
    let mut data = Vec::with_capacity(expected);
    for (k, e) in entries.iter().enumerate() {
        let field = || format!("entries[{k}]");
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| parse_err(field(), "expected [re, im]"))?;
        let re = pair[0]
            .as_f64()
            .ok_or_else(|| parse_err(field(), "real part is not a number"))?;
        let im = pair[1]
            .as_f64()
            .ok_or_else(|| parse_err(field(), "imaginary part is not a number"))?;
        if !re.is_finite() || !im.is_finite() {
            return Err(parse_err(field(), "entry is not finite"));
        }
        data.push(ComplexScalar::new(re, im));
    }
    ComplexMatrix::from_row_major(dim, data)
}

pub fn emit_json(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixFile::from(m)).expect("matrix file serializes")
}

/// Parses a single `a+bi`-style token.
pub fn parse_complex_token(token: &str) -> Option<ComplexScalar> {
    let s = token.trim();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return s.parse::<f64>().ok().map(|re| ComplexScalar::new(re, 0.0));
    };
    // Split at the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| -> Option<f64> {
        match s {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => s.parse().ok(),
        }
    };
    match split {
        Some(k) => Some(ComplexScalar::new(body[..k].parse().ok()?, imag(&body[k..])?)),
        None => Some(ComplexScalar::new(0.0, imag(body)?)),
    }
}

pub fn parse_text(text: &str) -> Result<ComplexMatrix> {
    let mut rows: Vec<Vec<ComplexScalar>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .enumerate()
            .map(|(col, tok)| {
                parse_complex_token(tok).ok_or_else(|| {
                    parse_err(
                        format!("line {} column {}", line_no + 1, col + 1),
                        format!("cannot parse `{tok}` as a complex number"),
                    )
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err("document", "no matrix rows"));
    }
    let dim = rows.len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
        return Err(parse_err(
            format!("row {}", i + 1),
            format!("has {} entries, expected {dim}", r.len()),
        ));
    }
    ComplexMatrix::from_rows(&rows)
}

/// JSON when the document starts with `{`, text grid otherwise.
pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn load_matrix(path: &Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err("path", format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}
