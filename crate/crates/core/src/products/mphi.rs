//! The `.mphi` text format: `#` comments, a `k m` header, the `k×k` table of
//! `E`, then `k²` blocks of `m` rows ordered `φ11, φ12, …, φkk`.

use crate::error::{Error, ParseError, Result};
use crate::set::MAX_ORDER;
use crate::table::{content_lines, parse_order, parse_row, CayleyTable};

use super::multiphi::MultiPhiSystem;

pub fn parse_mphi(text: &str) -> Result<MultiPhiSystem> {
    // only a comment ahead of the header names the system
    let name = text
        .lines()
        .map(str::trim)
        .take_while(|l| l.is_empty() || l.starts_with('#'))
        .find(|l| l.starts_with('#'))
        .map(|l| l.trim_start_matches('#').trim().to_string())
        .filter(|s| !s.is_empty());
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::EmptyInput)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(ParseError::BadHeader {
            line: header_line,
            token: header.to_string(),
        }
        .into());
    }
    let k = parse_order(header_line, tokens[0])?;
    let m = parse_order(header_line, tokens[1])?;
    if k * m > MAX_ORDER {
        return Err(Error::OrderTooLarge(k * m));
    }

    let mut read_block = |size: usize| -> Result<CayleyTable, ParseError> {
        let mut rows = Vec::with_capacity(size);
        while rows.len() < size {
            let (line_no, line) = lines.next().ok_or(ParseError::RowCount {
                expected: size,
                found: rows.len(),
            })?;
            rows.push(parse_row(line_no, line, size, size, rows.len() + 1)?);
        }
        CayleyTable::from_rows(&rows)
    };

    let e_table = read_block(k)?;
    let mut phi = Vec::with_capacity(k * k);
    for _ in 0..k * k {
        phi.push(read_block(m)?);
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(ParseError::TrailingContent {
            line: line_no,
            token: line.split_whitespace().next().unwrap_or("").to_string(),
        }
        .into());
    }
    let mp = MultiPhiSystem::new(e_table, phi)?;
    Ok(match name {
        Some(name) => mp.with_name(name),
        None => mp,
    })
}

fn push_rows(out: &mut String, t: &CayleyTable) {
    let body = t.to_tbl();
    // drop the order line (and a name line if present)
    for line in body.lines().skip_while(|l| l.starts_with('#')).skip(1) {
        out.push_str(line);
        out.push('\n');
    }
}

pub fn to_mphi(mp: &MultiPhiSystem) -> String {
    let mut out = String::new();
    if let Some(name) = &mp.name {
        out.push_str(&format!("# {name}\n"));
    }
    let k = mp.k();
    out.push_str(&format!("{k} {}\n", mp.m()));
    out.push_str("# E\n");
    push_rows(&mut out, &mp.e_table);
    for p in 1..=k {
        for q in 1..=k {
            out.push_str(&format!("# phi {p} {q}\n"));
            push_rows(&mut out, mp.phi(p, q));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip() {
        let mp = MultiPhiSystem::mono(catalog::table("c2").unwrap(), catalog::table("l5").unwrap())
            .with_name("c2 x l5");
        let text = to_mphi(&mp);
        let back = parse_mphi(&text).unwrap();
        assert_eq!(back.e_table, mp.e_table);
        assert_eq!(back.phi, mp.phi);
        assert_eq!(back.name.as_deref(), Some("c2 x l5"));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_mphi(""),
            Err(Error::Parse(ParseError::EmptyInput))
        ));
        assert!(matches!(
            parse_mphi("2\n1 2\n2 1"),
            Err(Error::Parse(ParseError::BadHeader { .. }))
        ));
        assert!(matches!(
            parse_mphi("1 2\n1\n1 2\n2 1\n9"),
            Err(Error::Parse(ParseError::TrailingContent { .. }))
        ));
        assert!(matches!(
            parse_mphi("1 2\n1\n1 2"),
            Err(Error::Parse(ParseError::RowCount { .. }))
        ));
        assert!(matches!(parse_mphi("9 9\n"), Err(Error::OrderTooLarge(81))));
    }
}
