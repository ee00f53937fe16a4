//! Plain-text serialization of codes.
//!
//! ```text
//! field 2^3 modulus 1,1,0,1
//! 7 3
//! 1 0 0 1 6 3 2
//! 0 1 0 5 4 7 1
//! 0 0 1 2 2 2 6
//! ```
//!
//! Line 1 names the field (the modulus is optional on input when a default
//! exists, always written on output; coefficients are listed constant
//! first).  Line 2 gives length and dimension, then one row per line using
//! integer element codes.  Blank lines and `#` comments are ignored.  Rows
//! are re-reduced on input, so a file is accepted even if not in canonical
//! form, but the writer always emits RREF.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use super::LinearCode;
use crate::gf::{parse_field_notation, Elem, Field};
use crate::{Error, Result};

/// Parse a code from any reader.
pub fn read_code<R: Read>(reader: R) -> Result<LinearCode> {
    let mut lines = BufReader::new(reader).lines().enumerate();
    let mut next_line = || -> Result<Option<(usize, String)>> {
        for item in lines.by_ref() {
            let (no, line) = (item.0, item.1?);
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Ok(Some((no + 1, line.to_string())));
        }
        Ok(None)
    };

    let (no, header) = next_line()?
        .ok_or_else(|| Error::Parse("empty input: expected a field header".into()))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("field") {
        return Err(Error::Parse(format!(
            "line {no}: expected `field p^h [modulus c0,c1,..]`, got `{header}`"
        )));
    }
    let notation = tokens
        .next()
        .ok_or_else(|| Error::Parse(format!("line {no}: missing field order")))?;
    let (p, h) = parse_field_notation(notation)?;
    let modulus: Option<Vec<u32>> = match tokens.next() {
        None => None,
        Some("modulus") => {
            let list = tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("line {no}: missing modulus list")))?;
            Some(
                list.split(',')
                    .map(|t| {
                        t.trim().parse::<u32>().map_err(|_| {
                            Error::Parse(format!("line {no}: bad modulus coefficient `{t}`"))
                        })
                    })
                    .collect::<Result<_>>()?,
            )
        }
        Some(other) => {
            return Err(Error::Parse(format!(
                "line {no}: unexpected token `{other}` in field header"
            )))
        }
    };
    if tokens.next().is_some() {
        return Err(Error::Parse(format!("line {no}: trailing tokens in field header")));
    }
    let field = Field::new(p, h, modulus.as_deref())?;

    let (no, dims) = next_line()?
        .ok_or_else(|| Error::Parse("missing `n k` line".into()))?;
    let parts: Vec<&str> = dims.split_whitespace().collect();
    let (n, k) = match parts.as_slice() {
        [a, b] => (
            a.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {no}: bad length `{a}`")))?,
            b.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {no}: bad dimension `{b}`")))?,
        ),
        _ => {
            return Err(Error::Parse(format!(
                "line {no}: expected `n k`, got `{dims}`"
            )))
        }
    };
    if k == 0 || n == 0 || k > n {
        return Err(Error::Parse(format!(
            "line {no}: invalid dimensions n={n}, k={k}"
        )));
    }

    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (no, line) = next_line()?.ok_or_else(|| {
            Error::Parse(format!("expected {k} generator rows, found {}", rows.len()))
        })?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<Elem>()
                    .map_err(|_| Error::Parse(format!("line {no}: bad symbol `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if let Some((no, extra)) = next_line()? {
        return Err(Error::Parse(format!(
            "line {no}: unexpected extra content `{extra}`"
        )));
    }
    let code = LinearCode::from_rows(field, rows)?;
    if code.n() != n {
        return Err(Error::Parse(format!(
            "declared length {n} but rows have {} columns",
            code.n()
        )));
    }
    if code.k() != k {
        return Err(Error::Parse(format!(
            "declared dimension {k} but rows have rank {}",
            code.k()
        )));
    }
    Ok(code)
}

/// Read a code from a file path.
pub fn read_code_from_path<P: AsRef<Path>>(path: P) -> Result<LinearCode> {
    read_code(File::open(path)?)
}

/// Write a code in the canonical text format.
pub fn write_code<W: Write>(code: &LinearCode, mut out: W) -> Result<()> {
    let f = code.field();
    let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    if f.h() == 1 {
        writeln!(out, "field {} modulus {}", f.p(), modulus.join(","))?;
    } else {
        writeln!(out, "field {}^{} modulus {}", f.p(), f.h(), modulus.join(","))?;
    }
    writeln!(out, "{} {}", code.n(), code.k())?;
    for row in code.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", cells.join(" "))?;
    }
    Ok(())
}

/// Write a code to a file path.
pub fn write_code_to_path<P: AsRef<Path>>(code: &LinearCode, path: P) -> Result<()> {
    write_code(code, File::create(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_the_code() {
        let f = Field::new(2, 3, None).unwrap();
        let code = LinearCode::from_rows(
            f,
            vec![vec![1, 2, 4, 3, 0, 1, 1], vec![0, 1, 0, 5, 2, 7, 6]],
        )
        .unwrap();
        let mut buf = Vec::new();
        write_code(&code, &mut buf).unwrap();
        let back = read_code(&buf[..]).unwrap();
        assert_eq!(back, code);
    }

    #[test]
    fn accepts_comments_defaults_and_non_canonical_rows() {
        let text = "# a comment\nfield 3\n\n3 2\n1 0 1\n1 1 0\n";
        let code = read_code(text.as_bytes()).unwrap();
        assert_eq!((code.n(), code.k()), (3, 2));
        assert_eq!(code.field().q(), 3);
        // Rows were reduced: the stored generator is in RREF.
        assert_eq!(code.rows()[0][0], 1);
        assert_eq!(code.rows()[1][0], 0);
    }

    #[test]
    fn distinct_parse_errors() {
        // Bad field token.
        assert!(matches!(
            read_code("field x\n2 1\n1 1\n".as_bytes()),
            Err(Error::Parse(_))
        ));
        // Invalid symbol for the field.
        assert!(matches!(
            read_code("field 2\n2 1\n1 5\n".as_bytes()),
            Err(Error::InvalidElement { value: 5, q: 2 })
        ));
        // Ragged rows.
        assert!(matches!(
            read_code("field 2\n3 2\n1 0 1\n1 1\n".as_bytes()),
            Err(Error::RaggedRows { row: 1, got: 2, expected: 3 })
        ));
        // All-zero generator.
        assert!(matches!(
            read_code("field 2\n2 1\n0 0\n".as_bytes()),
            Err(Error::ZeroCode)
        ));
        // Declared rank disagrees with the rows.
        assert!(matches!(
            read_code("field 2\n2 2\n1 1\n1 1\n".as_bytes()),
            Err(Error::Parse(_))
        ));
        // Truncated input.
        assert!(matches!(
            read_code("field 2\n3 2\n1 0 1\n".as_bytes()),
            Err(Error::Parse(_))
        ));
    }
}
