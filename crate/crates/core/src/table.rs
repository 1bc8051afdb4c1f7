//! Cayley tables and the `.tbl` text format.
//!
//! A table of order `n` holds the products of elements `1..=n`. Entries are
//! stored 0-based internally; everything public is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::set::{ElementSet, MAX_ORDER};

/// An `n×n` operation table over elements `1..=n`. Immutable once built.
///
/// Equality, hashing and ordering look at the entries only, never the name.
#[derive(Clone)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<u8>,
    name: Option<String>,
}

impl CayleyTable {
    /// Builds a table from 1-based rows; `rows[i][j]` is `(i+1)*(j+1)`.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, ParseError> {
        let n = rows.len();
        if n == 0 {
            return Err(ParseError::EmptyInput);
        }
        if n > MAX_ORDER {
            return Err(ParseError::OrderTooLarge(n));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(ParseError::NotSquare {
                    line: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(ParseError::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        order: n,
                    });
                }
                entries.push((v - 1) as u8);
            }
        }
        Ok(CayleyTable {
            n,
            entries,
            name: None,
        })
    }

    /// Builds a table from 0-based entries in row-major order.
    pub(crate) fn from_raw(n: usize, entries: Vec<u8>) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        debug_assert_eq!(entries.len(), n * n);
        debug_assert!(entries.iter().all(|&v| (v as usize) < n));
        CayleyTable {
            n,
            entries,
            name: None,
        }
    }

    /// Builds an order-`n` table from a 1-based product function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self, ParseError> {
        let rows: Vec<Vec<usize>> = (1..=n)
            .map(|i| (1..=n).map(|j| f(i, j)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The product `a ⋆ b` of 1-based elements.
    pub fn product(&self, a: usize, b: usize) -> usize {
        assert!((1..=self.n).contains(&a) && (1..=self.n).contains(&b));
        self.entries[(a - 1) * self.n + b - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn at(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.n + b] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.entries
    }

    /// Row `a` as 1-based values.
    pub fn row(&self, a: usize) -> Vec<usize> {
        (1..=self.n).map(|b| self.product(a, b)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n).map(|a| self.row(a)).collect()
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if (1..=self.n).contains(&x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                order: self.n,
            })
        }
    }

    pub(crate) fn check_subset(&self, set: ElementSet) -> Result<()> {
        if set.is_empty() {
            return Err(Error::EmptySeed);
        }
        if !set.is_subset(self.elements()) {
            let bad = set.difference(self.elements()).min().unwrap_or(0);
            return Err(Error::ElementOutOfRange {
                element: bad,
                order: self.n,
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> CayleyTable {
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| self.entries[(k % n) * n + k / n])
            .collect();
        CayleyTable::from_raw(n, entries)
    }

    /// Applies the relabeling `perm`, where `perm[x-1]` is the new name of
    /// element `x`. The result satisfies `new(perm(a), perm(b)) = perm(a ⋆ b)`.
    pub fn relabel(&self, perm: &[usize]) -> Result<CayleyTable> {
        let inv = invert_permutation(perm, self.n)
            .ok_or_else(|| Error::BadMapRange("relabeling is not a permutation".into()))?;
        let perm0: Vec<usize> = perm.iter().map(|&p| p - 1).collect();
        Ok(self.relabel0(&perm0, &inv))
    }

    /// 0-based relabeling with a precomputed inverse.
    pub(crate) fn relabel0(&self, perm: &[usize], inv: &[usize]) -> CayleyTable {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = perm[self.at(inv[i], inv[j])] as u8;
            }
        }
        CayleyTable::from_raw(n, entries)
    }

    /// The operation restricted to `set`, renumbered in ascending element
    /// order. Fails if `set` is not closed.
    pub fn induced(&self, set: ElementSet) -> Result<CayleyTable> {
        self.check_subset(set)?;
        let members: Vec<usize> = set.iter0().collect();
        let mut index = vec![usize::MAX; self.n];
        for (k, &x) in members.iter().enumerate() {
            index[x] = k;
        }
        let m = members.len();
        let mut entries = Vec::with_capacity(m * m);
        for &a in &members {
            for &b in &members {
                let p = index[self.at(a, b)];
                if p == usize::MAX {
                    return Err(Error::NotASubsystem(set));
                }
                entries.push(p as u8);
            }
        }
        Ok(CayleyTable::from_raw(m, entries))
    }

    /// Serializes to the `.tbl` format, with a `#` name line when named.
    pub fn to_tbl(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str("# ");
            out.push_str(name);
            out.push('\n');
        }
        out.push_str(&self.n.to_string());
        out.push('\n');
        let width = self.n.to_string().len();
        for a in 1..=self.n {
            let row: Vec<String> = self.row(a).iter().map(|v| format!("{v:>width$}")).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Inverts a 1-based permutation of `1..=n` into a 0-based inverse.
pub(crate) fn invert_permutation(perm: &[usize], n: usize) -> Option<Vec<usize>> {
    if perm.len() != n {
        return None;
    }
    let mut inv = vec![usize::MAX; n];
    for (x, &p) in perm.iter().enumerate() {
        if p == 0 || p > n || inv[p - 1] != usize::MAX {
            return None;
        }
        inv[p - 1] = x;
    }
    Some(inv)
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for CayleyTable {}

impl std::hash::Hash for CayleyTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.entries.hash(state);
    }
}

/// Order first, then the row-major flattened entries.
impl Ord for CayleyTable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for CayleyTable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable")?;
        if let Some(name) = &self.name {
            write!(f, "[{name}]")?;
        }
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tbl())
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    name: Option<String>,
    order: usize,
    rows: Vec<Vec<usize>>,
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            name: self.name.clone(),
            order: self.n,
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        if repr.rows.len() != repr.order {
            return Err(serde::de::Error::custom("row count does not match order"));
        }
        let table = CayleyTable::from_rows(&repr.rows).map_err(serde::de::Error::custom)?;
        Ok(match repr.name {
            Some(name) => table.with_name(name),
            None => table,
        })
    }
}

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a whitespace-separated row of `expected` positive integers in `1..=order`.
pub(crate) fn parse_row(
    line_no: usize,
    line: &str,
    expected: usize,
    order: usize,
    row_index: usize,
) -> Result<Vec<usize>, ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let mut row = Vec::with_capacity(expected);
    for (j, tok) in tokens.iter().enumerate() {
        let v: usize = tok.parse().map_err(|_| ParseError::BadToken {
            line: line_no,
            token: tok.to_string(),
        })?;
        if j < expected && (v == 0 || v > order) {
            return Err(ParseError::EntryOutOfRange {
                row: row_index,
                col: j + 1,
                value: v,
                order,
            });
        }
        row.push(v);
    }
    if row.len() != expected {
        return Err(ParseError::NotSquare {
            line: line_no,
            expected,
            found: row.len(),
        });
    }
    Ok(row)
}

/// Parses the header token on `line` as a positive order.
pub(crate) fn parse_order(line_no: usize, token: &str) -> Result<usize, ParseError> {
    match token.parse::<usize>() {
        Ok(0) | Err(_) => Err(ParseError::BadHeader {
            line: line_no,
            token: token.to_string(),
        }),
        Ok(n) if n > MAX_ORDER => Err(ParseError::OrderTooLarge(n)),
        Ok(n) => Ok(n),
    }
}

/// Parses the `.tbl` format: `#` comments, the order `n`, then `n` rows of
/// `n` entries in `1..=n`. The first comment line, if any, becomes the name.
pub fn parse_table(text: &str) -> Result<CayleyTable, ParseError> {
    let name = text
        .lines()
        .map(str::trim)
        .find(|l| l.starts_with('#'))
        .map(|l| l.trim_start_matches('#').trim().to_string())
        .filter(|s| !s.is_empty());
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::EmptyInput)?;
    let mut header_tokens = header.split_whitespace();
    let first = header_tokens.next().ok_or(ParseError::EmptyInput)?;
    let n = parse_order(header_line, first)?;
    if let Some(extra) = header_tokens.next() {
        return Err(ParseError::BadHeader {
            line: header_line,
            token: extra.to_string(),
        });
    }
    let mut rows = Vec::with_capacity(n);
    for (line_no, line) in lines.by_ref() {
        if rows.len() == n {
            return Err(ParseError::TrailingContent {
                line: line_no,
                token: line.split_whitespace().next().unwrap_or("").to_string(),
            });
        }
        rows.push(parse_row(line_no, line, n, n, rows.len() + 1)?);
    }
    if rows.len() != n {
        return Err(ParseError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let table = CayleyTable::from_rows(&rows)?;
    Ok(match name {
        Some(name) => table.with_name(name),
        None => table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c2() {
        let t = parse_table("2\n1 2\n2 1").unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.product(2, 2), 1);
    }

    #[test]
    fn parses_table_one_body() {
        let text = "5\n1 2 3 4 5\n2 1 5 3 4\n3 4 1 5 2\n4 5 2 1 3\n5 3 4 2 1\n";
        let t = parse_table(text).unwrap();
        assert_eq!(t.product(2, 3), 5);
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let err = parse_table("3\n1 2 3\n2 3 9\n3 1 2").unwrap_err();
        assert_eq!(
            err,
            ParseError::EntryOutOfRange {
                row: 2,
                col: 3,
                value: 9,
                order: 3
            }
        );
    }

    #[test]
    fn parse_errors_name_first_offender() {
        assert_eq!(parse_table("").unwrap_err(), ParseError::EmptyInput);
        assert_eq!(
            parse_table("# only a comment\n").unwrap_err(),
            ParseError::EmptyInput
        );
        assert!(matches!(
            parse_table("x\n1").unwrap_err(),
            ParseError::BadHeader { line: 1, .. }
        ));
        assert!(matches!(
            parse_table("0\n").unwrap_err(),
            ParseError::BadHeader { .. }
        ));
        assert!(matches!(
            parse_table("2\n1 2\n2").unwrap_err(),
            ParseError::NotSquare {
                line: 3,
                expected: 2,
                found: 1
            }
        ));
        assert!(matches!(
            parse_table("2\n1 2").unwrap_err(),
            ParseError::RowCount {
                expected: 2,
                found: 1
            }
        ));
        assert!(matches!(
            parse_table("2\n1 2\n2 a").unwrap_err(),
            ParseError::BadToken { line: 3, .. }
        ));
        assert!(matches!(
            parse_table("2\n1 2\n2 1\n1 2").unwrap_err(),
            ParseError::TrailingContent { line: 4, .. }
        ));
        assert_eq!(
            parse_table("65\n").unwrap_err(),
            ParseError::OrderTooLarge(65)
        );
    }

    #[test]
    fn comments_and_name() {
        let t = parse_table("# C2 group\n# another\n2\n# mid comment\n1 2\n2 1\n").unwrap();
        assert_eq!(t.name(), Some("C2 group"));
        let again = parse_table(&t.to_tbl()).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn relabel_and_induced() {
        let t = parse_table("3\n1 2 3\n2 3 1\n3 1 2").unwrap();
        let r = t.relabel(&[1, 3, 2]).unwrap();
        // 2*2=3 becomes 3*3=2
        assert_eq!(r.product(3, 3), 2);
        assert!(t.relabel(&[1, 1, 2]).is_err());
        let sub = t.induced(ElementSet::from_elements([1])).unwrap();
        assert_eq!(sub.order(), 1);
        assert!(matches!(
            t.induced(ElementSet::from_elements([1, 2])),
            Err(Error::NotASubsystem(_))
        ));
    }

    #[test]
    fn transpose_twice_is_identity() {
        let t = parse_table("3\n1 2 3\n3 1 2\n2 3 1").unwrap();
        assert_eq!(t.transpose().transpose(), t);
        assert_eq!(t.transpose().product(2, 1), t.product(1, 2));
    }
}
