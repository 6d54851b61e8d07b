//! Plain-text generator-matrix files.
//!
//! Format: a header line `q n k`, then k rows of n digit characters over
//! GF(q). Digits above 9 use `a`, `b`, `c` (for the 11- and 13-element
//! fields). Blank lines and lines starting with `#` are ignored. All
//! positions in errors are 1-based.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Matrix;

fn digit_value(ch: char) -> Option<u8> {
    match ch {
        '0'..='9' => Some(ch as u8 - b'0'),
        'a' | 'A' => Some(10),
        'b' | 'B' => Some(11),
        'c' | 'C' => Some(12),
        _ => None,
    }
}

fn digit_char(v: u8) -> char {
    match v {
        0..=9 => (b'0' + v) as char,
        10 => 'a',
        11 => 'b',
        12 => 'c',
        _ => unreachable!("digit {v} out of range"),
    }
}

/// Lines that carry content: (1-based line number, trimmed text).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Parses a generator-matrix file into a validated code.
pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::MalformedHeader {
        line: 1,
        detail: "empty file: expected a `q n k` header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::MalformedHeader {
            line: header_line,
            detail: format!("expected 3 fields `q n k`, found {}", fields.len()),
        });
    }
    let parse_field = |s: &str, what: &str| -> Result<u64> {
        s.parse().map_err(|_| Error::MalformedHeader {
            line: header_line,
            detail: format!("{what} `{s}` is not a non-negative integer"),
        })
    };
    let q = parse_field(fields[0], "modulus")?;
    let n = parse_field(fields[1], "length")?;
    let k = parse_field(fields[2], "dimension")?;
    if !crate::field::SUPPORTED_PRIMES.contains(&(q.min(255) as u8)) {
        return Err(Error::MalformedHeader {
            line: header_line,
            detail: format!("modulus {q} is not a supported prime (2, 3, 5, 7, 11, 13)"),
        });
    }
    if n == 0 || n > 63 {
        return Err(Error::MalformedHeader {
            line: header_line,
            detail: format!("length {n} out of range 1..=63"),
        });
    }
    if k == 0 || k > n {
        return Err(Error::MalformedHeader {
            line: header_line,
            detail: format!("dimension {k} out of range 1..={n}"),
        });
    }

    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(k as usize);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if rows.len() == k as usize {
            return Err(Error::MalformedHeader {
                line: line_no,
                detail: format!("unexpected content after {k} matrix rows"),
            });
        }
        let row_text = line.trim();
        let mut row = Vec::with_capacity(n as usize);
        for (col0, ch) in row_text.chars().enumerate() {
            let v = digit_value(ch).ok_or(Error::BadDigit { line: line_no, col: col0 + 1 })?;
            if u64::from(v) >= q {
                return Err(Error::BadDigit { line: line_no, col: col0 + 1 });
            }
            row.push(v);
        }
        if row.len() != n as usize {
            return Err(Error::MalformedHeader {
                line: line_no,
                detail: format!("row has {} digits, expected {n}", row.len()),
            });
        }
        rows.push(row);
        last_line = line_no;
    }
    if rows.len() != k as usize {
        return Err(Error::MalformedHeader {
            line: last_line + 1,
            detail: format!("expected {k} matrix rows, found {}", rows.len()),
        });
    }

    let generator = Matrix::from_rows(q as u8, &rows).expect("digits already range-checked");
    LinearCode::new(generator)
}

/// Renders a code back to the file format, with its name (if any) as a
/// leading comment. `parse_code_file` on the output reproduces the code.
pub fn render_code_file(c: &LinearCode) -> String {
    let mut out = String::new();
    if let Some(name) = c.name() {
        out.push_str(&format!("# {name}\n"));
    }
    let g = c.generator();
    out.push_str(&format!("{} {} {}\n", c.modulus(), c.length(), c.dimension()));
    for r in 0..g.rows() {
        for &v in g.row(r) {
            out.push(digit_char(v));
        }
        out.push('\n');
    }
    out
}
