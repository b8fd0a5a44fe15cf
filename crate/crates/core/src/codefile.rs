//! Plain-text code files.
//!
//! ```text
//! # optional comment lines start with '#'
//! # claimed_d: 4          (optional design distance)
//! q n k
//! <k rows of n whitespace-separated lowercase hex symbols in [0, q)>
//! ```
//!
//! Symbols encode the polynomial-basis coordinate vector of a field element
//! (bit 0 is the constant coefficient). Fields with `q > 2` use the default
//! modulus of their degree.

use std::fmt::Write as _;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{FieldElement, FieldSpec};
use crate::gf2la::{BitMatrix, FqMatrix};

const CLAIMED_D: &str = "claimed_d:";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<LinearCode> {
    let mut claimed_d = None;
    let mut header: Option<(usize, FieldSpec, usize, usize)> = None;
    let mut rows: Vec<(usize, Vec<u32>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix(CLAIMED_D) {
                let d = v
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad claimed_d value"))?;
                claimed_d = Some(d);
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match &header {
            None => {
                let nums: Vec<usize> = tokens
                    .iter()
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| parse_err(lineno, "header must be 'q n k' in decimal"))?;
                let [q, n, k] = nums[..] else {
                    return Err(parse_err(
                        lineno,
                        "header must have exactly three fields 'q n k'",
                    ));
                };
                if q < 2 || !q.is_power_of_two() {
                    return Err(parse_err(
                        lineno,
                        format!("q = {q} is not a power of two >= 2"),
                    ));
                }
                let m = q.trailing_zeros();
                let spec =
                    FieldSpec::with_degree(m).map_err(|e| parse_err(lineno, e.to_string()))?;
                header = Some((lineno, spec, n, k));
            }
            Some((_, spec, n, _)) => {
                if tokens.len() != *n {
                    return Err(parse_err(
                        lineno,
                        format!("expected {n} symbols, found {}", tokens.len()),
                    ));
                }
                let mut row = Vec::with_capacity(*n);
                for t in tokens {
                    let v = u32::from_str_radix(t, 16)
                        .map_err(|_| parse_err(lineno, format!("'{t}' is not a hex symbol")))?;
                    if v as usize >= spec.q() {
                        return Err(parse_err(
                            lineno,
                            format!("symbol {t} is not below q = {}", spec.q()),
                        ));
                    }
                    row.push(v);
                }
                rows.push((lineno, row));
            }
        }
    }
    let (hline, spec, n, k) = header.ok_or_else(|| parse_err(0, "missing 'q n k' header"))?;
    if rows.len() != k {
        return Err(parse_err(
            hline,
            format!("header declares {k} rows, found {}", rows.len()),
        ));
    }
    let code = if spec.is_binary() {
        let g = BitMatrix::from_fn(k, n, |r, c| rows[r].1[c] == 1);
        LinearCode::binary(g)
    } else {
        let data = rows
            .into_iter()
            .map(|(_, r)| r.into_iter().map(FieldElement).collect())
            .collect();
        LinearCode::over_field(FqMatrix::from_rows(&spec, n, data)?)
    };
    let code = code.map_err(|e| parse_err(hline, format!("generator is not full rank: {e}")))?;
    Ok(code.with_claimed_distance(claimed_d))
}

/// Serializes a code; `comments` are written first as `#` lines.
pub fn emit(code: &LinearCode, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(s, "# {line}");
        }
    }
    if let Some(d) = code.claimed_distance() {
        let _ = writeln!(s, "# {CLAIMED_D} {d}");
    }
    let _ = writeln!(s, "{} {} {}", code.field().q(), code.len(), code.dim());
    for r in 0..code.dim() {
        let row: Vec<String> = (0..code.len())
            .map(|c| format!("{:x}", code.symbol(r, c)))
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}
