//! Text formats for generator matrices.
//!
//! Plain format: a header line `n k` followed by `k` lines of `n` characters
//! from `{0, 1}`. Hex format: a header `hex n k` followed by `k` rows of hex
//! digits, each digit standing for four coordinates, most significant bit first,
//! with the row zero-padded on the right to a multiple of four.

use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BitVector};

fn parse_hex_row(row: &str, n: usize, line: Option<usize>) -> Result<BitVector> {
    let row = row.trim();
    let width = 4 * row.len();
    if width < n || width - n > 3 {
        return Err(Error::format(
            line,
            format!(
                "{} hex digits cannot hold exactly {n} coordinates",
                row.len()
            ),
        ));
    }
    let mut v = BitVector::zeros(width);
    for (t, ch) in row.chars().enumerate() {
        let d = ch
            .to_digit(16)
            .ok_or_else(|| Error::format(line, format!("invalid hex digit {ch:?}")))?;
        for b in 0..4 {
            if (d >> (3 - b)) & 1 == 1 {
                v.set(4 * t + b, true);
            }
        }
    }
    if v.slice(n, width).weight() != 0 {
        return Err(Error::format(
            line,
            "nonzero padding bits after the last coordinate",
        ));
    }
    Ok(v.slice(0, n))
}

fn emit_hex_row(v: &BitVector) -> String {
    let digits = v.len().div_ceil(4);
    (0..digits)
        .map(|t| {
            let mut d = 0u32;
            for b in 0..4 {
                let i = 4 * t + b;
                if i < v.len() && v.get(i) {
                    d |= 1 << (3 - b);
                }
            }
            char::from_digit(d, 16).expect("digit < 16")
        })
        .collect()
}

/// Parses hex rows into the code they generate.
pub fn parse_hex<S: AsRef<str>>(rows: &[S], n: usize) -> Result<LinearCode> {
    let width = rows.first().map(|r| r.as_ref().trim().len());
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, r) in rows.iter().enumerate() {
        if Some(r.as_ref().trim().len()) != width {
            return Err(Error::format(Some(i + 1), "ragged hex rows"));
        }
        parsed.push(parse_hex_row(r.as_ref(), n, Some(i + 1))?);
    }
    LinearCode::from_generator(&BinaryMatrix::from_rows(n, parsed)?)
}

/// Generator rows in hex, the exact inverse of [`parse_hex`].
pub fn emit_hex(c: &LinearCode) -> Vec<String> {
    c.generator()
        .row_vectors()
        .iter()
        .map(emit_hex_row)
        .collect()
}

/// Reads either file format, detected from the header.
pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::format(None, "empty code file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (hex, nums) = match fields.as_slice() {
        ["hex", rest @ ..] => (true, rest),
        rest => (false, rest),
    };
    let parse_num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::format(Some(hline), format!("bad header field {s:?}")))
    };
    let [n, k] = nums else {
        return Err(Error::format(
            Some(hline),
            "header must be `n k` or `hex n k`",
        ));
    };
    let (n, k) = (parse_num(n)?, parse_num(k)?);
    let mut rows = Vec::with_capacity(k);
    for (ln, line) in lines {
        if rows.len() == k {
            return Err(Error::format(Some(ln), format!("more than {k} rows")));
        }
        let row = if hex {
            parse_hex_row(line, n, Some(ln))?
        } else {
            if line.len() != n {
                return Err(Error::format(
                    Some(ln),
                    format!("row has {} characters, expected {n}", line.len()),
                ));
            }
            line.parse::<BitVector>()
                .map_err(|e| Error::format(Some(ln), e.to_string()))?
        };
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::format(
            None,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    let code = LinearCode::from_generator(&BinaryMatrix::from_rows(n, rows)?)?;
    if code.k() != k {
        return Err(Error::format(None, "generator rows are linearly dependent"));
    }
    Ok(code)
}

/// Plain `n k` format.
pub fn write_code_file(c: &LinearCode) -> String {
    let mut out = format!("{} {}\n", c.n(), c.k());
    for r in c.generator().row_vectors() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// `hex n k` format.
pub fn write_hex_file(c: &LinearCode) -> String {
    let mut out = format!("hex {} {}\n", c.n(), c.k());
    for r in emit_hex(c) {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
