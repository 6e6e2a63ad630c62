//! Text forms of polynomials, vectors and matrices.
//!
//! ```text
//! POLY   := TERM ('+' TERM)*
//! TERM   := COEFF | COEFF 'x' | COEFF 'x^' EXP | 'x' | 'x^' EXP
//! VECTOR := '[' POLY (',' POLY)* ']'
//! MATRIX := one VECTOR per line
//! ```
//!
//! Whitespace is ignored. Terms may also be joined or prefixed by `-` (or the
//! Unicode minus sign), and coefficients are reduced modulo p^r. In a matrix,
//! blank lines are skipped and `#` starts a comment that runs to the end of the
//! line. Output always uses canonical residues, descending degree, and no signs.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polyvec::PolyVec;
use crate::ring::RingParams;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn take_number(chars: &[char], i: &mut usize) -> Option<u128> {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    if *i == start {
        return None;
    }
    chars[start..*i].iter().collect::<String>().parse().ok()
}

pub fn parse_poly(ring: RingParams, s: &str) -> Result<Poly> {
    let chars: Vec<char> = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if chars.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let modulus = ring.modulus() as u128;
    let mut coeffs: Vec<u64> = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        match chars[i] {
            '+' if !first => i += 1,
            '-' => {
                negative = true;
                i += 1;
            }
            _ if first => {}
            c => {
                return Err(parse_err(format!(
                    "expected '+' or '-' before `{c}` in `{s}`"
                )))
            }
        }
        first = false;
        let coeff = take_number(&chars, &mut i);
        let mut exp = 0usize;
        if i < chars.len() && chars[i] == 'x' {
            i += 1;
            exp = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                exp = take_number(&chars, &mut i)
                    .ok_or_else(|| parse_err(format!("missing exponent in `{s}`")))?
                    as usize;
            }
        } else if coeff.is_none() {
            return Err(parse_err(format!("malformed term in `{s}`")));
        }
        let mut c = (coeff.unwrap_or(1) % modulus) as u64;
        if negative {
            c = ring.neg(c);
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = ring.add(coeffs[exp], c);
    }
    Ok(Poly::from_coeffs(ring, coeffs))
}

pub fn parse_vector(ring: RingParams, s: &str) -> Result<PolyVec> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("vector must be enclosed in brackets: `{s}`")))?;
    let components = inner
        .split(',')
        .map(|part| parse_poly(ring, part))
        .collect::<Result<Vec<_>>>()?;
    PolyVec::from_components(ring, &components)
}

/// Parses one vector per non-blank line; all rows must share a dimension.
pub fn parse_matrix(ring: RingParams, s: &str) -> Result<Vec<PolyVec>> {
    let mut rows: Vec<PolyVec> = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let row = parse_vector(ring, content)
            .map_err(|e| parse_err(format!("line {}: {e}", lineno + 1)))?;
        if let Some(first) = rows.first() {
            if first.q() != row.q() {
                return Err(parse_err(format!(
                    "line {}: row has {} entries, expected {}",
                    lineno + 1,
                    row.q(),
                    first.q()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err("matrix has no rows"));
    }
    Ok(rows)
}

pub fn format_poly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = f
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(d, c)| match (d, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (d, 1) => format!("x^{d}"),
            (d, c) => format!("{c}x^{d}"),
        })
        .collect();
    terms.join("+")
}

pub fn format_vector(v: &PolyVec) -> String {
    let parts: Vec<String> = v.components().iter().map(format_poly).collect();
    format!("[{}]", parts.join(", "))
}

pub fn format_matrix(rows: &[PolyVec]) -> String {
    rows.iter().map(|r| format_vector(r) + "\n").collect()
}
