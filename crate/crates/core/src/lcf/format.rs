//! The row-labelled table layout: an `LCF(r,s)` header line followed by
//! lines `i: t1 t2 ...` of signed offsets.

use thiserror::Error;

use super::{LcfError, LcfScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcfParseError {
    #[error("missing LCF(r,s) header line")]
    MissingHeader,
    #[error("line {line}: malformed LCF(r,s) header")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected a row label followed by ':'")]
    MalformedRowLabel { line: usize },
    #[error("line {line}: row {row} listed twice")]
    DuplicateRow { line: usize, row: usize },
    #[error("line {line}: row {row} is out of range for {r} rows")]
    RowOutOfRange { line: usize, row: usize, r: usize },
    #[error("line {line}: {token:?} is not a signed integer offset")]
    BadOffset { line: usize, token: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: LcfError },
    #[error("no rows given")]
    Empty,
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_header(text: &str) -> Option<(usize, usize)> {
    let inner = text.strip_prefix("LCF(")?.strip_suffix(')')?;
    let (r, s) = inner.split_once(',')?;
    Some((r.trim().parse().ok()?, s.trim().parse().ok()?))
}

/// Parses a table with its `LCF(r,s)` header.
pub fn parse_lcf_table(text: &str) -> Result<LcfScheme, LcfParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, content(l))).filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(LcfParseError::MissingHeader)?;
    if !header.starts_with("LCF") {
        return Err(LcfParseError::MissingHeader);
    }
    let (r, s) = parse_header(header).ok_or(LcfParseError::MalformedHeader { line })?;
    if r == 0 || s == 0 {
        return Err(LcfParseError::Invalid { line, source: LcfError::BadShape { r, s } });
    }
    parse_rows(lines, Some(r), s)
}

/// Parses header-less rows; `r` is one more than the largest row label.
pub fn parse_lcf_rows(text: &str, s: usize) -> Result<LcfScheme, LcfParseError> {
    let lines = text.lines().enumerate().map(|(i, l)| (i + 1, content(l))).filter(|(_, l)| !l.is_empty());
    parse_rows(lines, None, s)
}

fn parse_rows<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    r: Option<usize>,
    s: usize,
) -> Result<LcfScheme, LcfParseError> {
    let mut parsed: Vec<(usize, usize, Vec<i64>)> = Vec::new();
    for (line, text) in lines {
        let (label, rest) = text.split_once(':').ok_or(LcfParseError::MalformedRowLabel { line })?;
        let row: usize = label.trim().parse().map_err(|_| LcfParseError::MalformedRowLabel { line })?;
        if let Some(r) = r {
            if row >= r {
                return Err(LcfParseError::RowOutOfRange { line, row, r });
            }
        }
        if parsed.iter().any(|&(_, prev, _)| prev == row) {
            return Err(LcfParseError::DuplicateRow { line, row });
        }
        let offsets = rest
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| LcfParseError::BadOffset { line, token: tok.to_string() }))
            .collect::<Result<Vec<_>, _>>()?;
        parsed.push((line, row, offsets));
    }
    let r = match r {
        Some(r) => r,
        None => parsed.iter().map(|&(_, row, _)| row + 1).max().ok_or(LcfParseError::Empty)?,
    };
    let mut rows = vec![Vec::new(); r];
    for (line, row, offsets) in &parsed {
        // validate row by row so errors carry the offending line
        LcfScheme::new(1, r * s, vec![offsets.clone()]).map_err(|e| LcfParseError::Invalid {
            line: *line,
            source: match e {
                LcfError::SelfLoop { offset, order, .. } => LcfError::SelfLoop { row: *row, offset, order },
                LcfError::OffsetOutOfRange { offset, order, .. } => {
                    LcfError::OffsetOutOfRange { row: *row, offset, order }
                }
                other => other,
            },
        })?;
        rows[*row] = offsets.clone();
    }
    Ok(LcfScheme::new(r, s, rows).expect("rows validated above"))
}

/// Header line plus one `i: t1 t2 ...` line per row.
pub fn emit_lcf_table(scheme: &LcfScheme) -> String {
    let mut out = format!("LCF({},{})\n", scheme.r(), scheme.s());
    for (i, offsets) in scheme.rows().iter().enumerate() {
        out.push_str(&format!("{i}:"));
        for t in offsets {
            out.push_str(&format!(" {t}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "LCF(2,5)\n0: 1 -1 4\n1: 2 -4\n";
        let scheme = parse_lcf_table(text).unwrap();
        assert_eq!((scheme.r(), scheme.s()), (2, 5));
        assert_eq!(emit_lcf_table(&scheme), text);
        assert_eq!(parse_lcf_table(&emit_lcf_table(&scheme)).unwrap(), scheme);
    }

    #[test]
    fn header_less_rows() {
        let scheme = parse_lcf_rows("0: 1\n2: 3\n", 4).unwrap();
        assert_eq!(scheme.r(), 3);
        assert_eq!(scheme.rows()[1], Vec::<i64>::new());
    }

    #[test]
    fn errors_name_the_line() {
        assert!(matches!(
            parse_lcf_rows("0: 0", 5),
            Err(LcfParseError::Invalid { line: 1, source: LcfError::SelfLoop { row: 0, .. } })
        ));
        assert_eq!(parse_lcf_table("0: 1"), Err(LcfParseError::MissingHeader));
        assert_eq!(parse_lcf_table("LCF(2)\n"), Err(LcfParseError::MalformedHeader { line: 1 }));
        assert_eq!(parse_lcf_table("LCF(2,5)\nx: 1"), Err(LcfParseError::MalformedRowLabel { line: 2 }));
        assert_eq!(parse_lcf_table("LCF(2,5)\n2: 1"), Err(LcfParseError::RowOutOfRange { line: 2, row: 2, r: 2 }));
        assert_eq!(parse_lcf_table("LCF(2,5)\n0: 1\n0: 2"), Err(LcfParseError::DuplicateRow { line: 3, row: 0 }));
        assert!(matches!(
            parse_lcf_table("LCF(2,5)\n# comment\n1: 6"),
            Err(LcfParseError::Invalid {
                line: 3,
                source: LcfError::OffsetOutOfRange { row: 1, offset: 6, order: 10 }
            })
        ));
        assert!(matches!(parse_lcf_table("LCF(2,5)\n0: 1 x"), Err(LcfParseError::BadOffset { line: 2, .. })));
    }
}
