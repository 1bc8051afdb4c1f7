//! Axioms A1–A6, one- and two-sided identities and inverses, and the
//! axiom-type classification of a table.
//!
//! | axiom | statement |
//! |-------|-----------|
//! | A1 | closure (always true for a parsed table) |
//! | A2 | a unique two-sided identity exists |
//! | A3 | every element has a unique two-sided inverse |
//! | A4 | `a⋆x = b` and `y⋆a = b` have unique solutions |
//! | A5 | commutativity |
//! | A6 | associativity |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::CayleyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An equation `a⋆x = b` (`Left`) or `y⋆a = b` (`Right`) without a unique solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnsolvableEquation {
    pub a: usize,
    pub b: usize,
    pub side: Side,
    /// How many solutions the equation has (0 or at least 2).
    pub solutions: usize,
}

/// The rows of the axiom-type table, most specific applicable kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemKind {
    Groupoid,
    Quasigroup,
    Loop,
    InvertibleLoop,
    Nafil,
    Semigroup,
    Monoid,
    Group,
}

impl SystemKind {
    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Groupoid => "groupoid",
            SystemKind::Quasigroup => "quasigroup",
            SystemKind::Loop => "loop",
            SystemKind::InvertibleLoop => "invertible loop",
            SystemKind::Nafil => "NAFIL",
            SystemKind::Semigroup => "semigroup",
            SystemKind::Monoid => "monoid",
            SystemKind::Group => "group",
        }
    }

    pub fn axiom_type(self) -> &'static str {
        match self {
            SystemKind::Groupoid => "A[1]",
            SystemKind::Quasigroup => "A[1,4]",
            SystemKind::Loop => "A[1,4,2]",
            SystemKind::InvertibleLoop => "A[1,4,2,3]",
            SystemKind::Nafil => "A[1,4,2,3](~A6)",
            SystemKind::Semigroup => "A[1,6]",
            SystemKind::Monoid => "A[1,6,2]",
            SystemKind::Group => "A[1,4,2,3,6]",
        }
    }

    /// Kind for a combination of axioms. The abelian flag (A5) is orthogonal.
    pub fn classify(a2: bool, a3: bool, a4: bool, a6: bool) -> SystemKind {
        match (a4, a2, a3, a6) {
            (true, true, true, true) => SystemKind::Group,
            (true, true, true, false) => SystemKind::Nafil,
            // An associative loop is a group, so this row is never associative.
            (true, true, false, _) => SystemKind::Loop,
            (true, false, _, _) => SystemKind::Quasigroup,
            (false, true, _, true) => SystemKind::Monoid,
            (false, false, _, true) => SystemKind::Semigroup,
            (false, _, _, false) => SystemKind::Groupoid,
        }
    }

    /// At least a loop (A1, A4, A2).
    pub fn is_loop(self) -> bool {
        matches!(
            self,
            SystemKind::Loop | SystemKind::InvertibleLoop | SystemKind::Nafil | SystemKind::Group
        )
    }

    /// At least an invertible loop (A1, A4, A2, A3).
    pub fn is_invertible_loop(self) -> bool {
        matches!(
            self,
            SystemKind::InvertibleLoop | SystemKind::Nafil | SystemKind::Group
        )
    }

    pub fn is_quasigroup(self) -> bool {
        self.is_loop() || self == SystemKind::Quasigroup
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomProfile {
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
    pub a4: bool,
    pub a5: bool,
    pub a6: bool,
    pub witness_a4: Option<UnsolvableEquation>,
    pub witness_a5: Option<(usize, usize)>,
    pub witness_a6: Option<(usize, usize, usize)>,
    pub kind: SystemKind,
    pub label: String,
}

impl AxiomProfile {
    pub fn is_loop(&self) -> bool {
        self.kind.is_loop()
    }

    pub fn is_invertible_loop(&self) -> bool {
        self.kind.is_invertible_loop()
    }

    pub fn is_quasigroup(&self) -> bool {
        self.kind.is_quasigroup()
    }
}

/// Label text for a set of axioms, e.g. `NAFIL: A[1,4,2,3](~A6)`; abelian
/// systems get an `abelian ` prefix and an `A[5]` suffix.
pub fn label_for(kind: SystemKind, abelian: bool) -> String {
    if abelian {
        format!("abelian {}: {} A[5]", kind.name(), kind.axiom_type())
    } else {
        format!("{}: {}", kind.name(), kind.axiom_type())
    }
}

/// First equation without a unique solution, scanning `(a, b)` in
/// lexicographic order and checking the left equation before the right one.
pub fn latin_witness(t: &CayleyTable) -> Option<UnsolvableEquation> {
    let n = t.order();
    let mut row_count = vec![0usize; n * n];
    let mut col_count = vec![0usize; n * n];
    for a in 0..n {
        for x in 0..n {
            let v = t.at(a, x);
            row_count[a * n + v] += 1;
            col_count[a * n + t.at(x, a)] += 1;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for (side, counts) in [(Side::Left, &row_count), (Side::Right, &col_count)] {
                let solutions = counts[a * n + b];
                if solutions != 1 {
                    return Some(UnsolvableEquation {
                        a: a + 1,
                        b: b + 1,
                        side,
                        solutions,
                    });
                }
            }
        }
    }
    None
}

/// True iff every row and column is a permutation.
pub fn is_latin(t: &CayleyTable) -> bool {
    let n = t.order();
    let full = ElementSet::full(n).bits();
    (0..n).all(|a| {
        let mut row = 0u64;
        let mut col = 0u64;
        for x in 0..n {
            row |= 1 << t.at(a, x);
            col |= 1 << t.at(x, a);
        }
        row == full && col == full
    })
}

pub fn commutativity_witness(t: &CayleyTable) -> Option<(usize, usize)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            if t.at(a, b) != t.at(b, a) {
                return Some((a + 1, b + 1));
            }
        }
    }
    None
}

/// First triple `(a,b,c)` in lexicographic order with `(a⋆b)⋆c ≠ a⋆(b⋆c)`.
pub fn associativity_witness(t: &CayleyTable) -> Option<(usize, usize, usize)> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            let ab = t.at(a, b);
            for c in 0..n {
                if t.at(ab, c) != t.at(a, t.at(b, c)) {
                    return Some((a + 1, b + 1, c + 1));
                }
            }
        }
    }
    None
}

pub fn is_associative(t: &CayleyTable) -> bool {
    associativity_witness(t).is_none()
}

pub fn is_commutative(t: &CayleyTable) -> bool {
    commutativity_witness(t).is_none()
}

/// 0-based two-sided identity, if any.
pub(crate) fn identity0(t: &CayleyTable) -> Option<usize> {
    let n = t.order();
    (0..n).find(|&e| (0..n).all(|x| t.at(e, x) == x && t.at(x, e) == x))
}

/// The two-sided identity as a 1-based element.
pub fn identity(t: &CayleyTable) -> Option<usize> {
    identity0(t).map(|e| e + 1)
}

/// With identity `e`: every element has exactly one `y` with `x⋆y = y⋆x = e`.
fn has_unique_inverses(t: &CayleyTable, e: usize) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        (0..n)
            .filter(|&y| t.at(x, y) == e && t.at(y, x) == e)
            .count()
            == 1
    })
}

pub fn axiom_profile(t: &CayleyTable) -> AxiomProfile {
    let witness_a4 = latin_witness(t);
    let witness_a5 = commutativity_witness(t);
    let witness_a6 = associativity_witness(t);
    let e = identity0(t);
    let a2 = e.is_some();
    let a3 = e.is_some_and(|e| has_unique_inverses(t, e));
    let a4 = witness_a4.is_none();
    let a5 = witness_a5.is_none();
    let a6 = witness_a6.is_none();
    let kind = SystemKind::classify(a2, a3, a4, a6);
    AxiomProfile {
        a1: true,
        a2,
        a3,
        a4,
        a5,
        a6,
        witness_a4,
        witness_a5,
        witness_a6,
        kind,
        label: label_for(kind, a5),
    }
}

pub fn is_nafil(t: &CayleyTable) -> bool {
    axiom_profile(t).kind == SystemKind::Nafil
}

/// Cheap loop test: Latin square with a two-sided identity.
pub fn is_loop(t: &CayleyTable) -> bool {
    is_latin(t) && identity0(t).is_some()
}

pub fn is_invertible_loop(t: &CayleyTable) -> bool {
    is_latin(t) && identity0(t).is_some_and(|e| has_unique_inverses(t, e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementIdentityInfo {
    pub left_identities: ElementSet,
    pub right_identities: ElementSet,
    pub two_sided_identity: Option<usize>,
}

pub fn identity_info(t: &CayleyTable) -> ElementIdentityInfo {
    let n = t.order();
    let mut left = ElementSet::EMPTY;
    let mut right = ElementSet::EMPTY;
    for e in 0..n {
        if (0..n).all(|x| t.at(e, x) == x) {
            left.insert0(e);
        }
        if (0..n).all(|x| t.at(x, e) == x) {
            right.insert0(e);
        }
    }
    ElementIdentityInfo {
        left_identities: left,
        right_identities: right,
        two_sided_identity: left.intersection(right).min(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseInfo {
    pub element: usize,
    /// The unique `y` with `y⋆x = 1`, if exactly one exists.
    pub left_inverse: Option<usize>,
    /// The unique `y` with `x⋆y = 1`, if exactly one exists.
    pub right_inverse: Option<usize>,
    pub two_sided: Option<usize>,
}

fn unique<I: Iterator<Item = usize>>(mut it: I) -> Option<usize> {
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

pub fn inverse_info(t: &CayleyTable, x: usize) -> Result<InverseInfo> {
    t.check_element(x)?;
    let e = identity0(t).ok_or(Error::NoIdentity)?;
    let n = t.order();
    let x0 = x - 1;
    let left_inverse = unique((0..n).filter(|&y| t.at(y, x0) == e)).map(|y| y + 1);
    let right_inverse = unique((0..n).filter(|&y| t.at(x0, y) == e)).map(|y| y + 1);
    let two_sided = match (left_inverse, right_inverse) {
        (Some(l), Some(r)) if l == r => Some(l),
        _ => None,
    };
    Ok(InverseInfo {
        element: x,
        left_inverse,
        right_inverse,
        two_sided,
    })
}

/// Two-sided inverse map of an invertible loop, 0-based.
pub(crate) fn inverse_map0(t: &CayleyTable) -> Option<Vec<usize>> {
    let e = identity0(t)?;
    let n = t.order();
    (0..n)
        .map(|x| {
            let y = (0..n).find(|&y| t.at(x, y) == e)?;
            (t.at(y, x) == e).then_some(y)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::parse_table;

    fn l5() -> CayleyTable {
        parse_table("5\n1 2 3 4 5\n2 1 5 3 4\n3 4 1 5 2\n4 5 2 1 3\n5 3 4 2 1").unwrap()
    }

    fn c2() -> CayleyTable {
        parse_table("2\n1 2\n2 1").unwrap()
    }

    fn q3() -> CayleyTable {
        parse_table("3\n1 2 3\n3 1 2\n2 3 1").unwrap()
    }

    /// Brute-force first non-associative triple, written independently.
    fn oracle_assoc(t: &CayleyTable) -> Option<(usize, usize, usize)> {
        let n = t.order();
        let mut triples = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    triples.push((a, b, c));
                }
            }
        }
        triples
            .into_iter()
            .find(|&(a, b, c)| t.product(t.product(a, b), c) != t.product(a, t.product(b, c)))
    }

    #[test]
    fn table_one_is_nafil() {
        let p = axiom_profile(&l5());
        assert!(p.a1 && p.a2 && p.a3 && p.a4 && !p.a5 && !p.a6);
        assert_eq!(p.kind, SystemKind::Nafil);
        assert_eq!(p.label, "NAFIL: A[1,4,2,3](~A6)");
        assert_eq!(p.witness_a6, oracle_assoc(&l5()));
        assert_eq!(p.witness_a6, Some((2, 2, 3)));
        // (2,3,4) also fails, just not first: (2⋆3)⋆4 = 2, 2⋆(3⋆4) = 4.
        let t = l5();
        assert_eq!(t.product(t.product(2, 3), 4), 2);
        assert_eq!(t.product(2, t.product(3, 4)), 4);
        assert!(is_nafil(&t));
    }

    #[test]
    fn c2_is_a_group() {
        let p = axiom_profile(&c2());
        assert_eq!(p.kind, SystemKind::Group);
        assert_eq!(p.kind.axiom_type(), "A[1,4,2,3,6]");
        assert!(p.a5);
        assert_eq!(p.label, "abelian group: A[1,4,2,3,6] A[5]");
        assert!(!is_nafil(&c2()));
    }

    #[test]
    fn identity_free_quasigroup() {
        let t = q3();
        let p = axiom_profile(&t);
        assert!(p.a1 && p.a4 && !p.a2 && !p.a3);
        assert_eq!(p.kind, SystemKind::Quasigroup);
        let info = identity_info(&t);
        assert_eq!(info.left_identities.to_vec(), vec![1]);
        assert!(info.right_identities.is_empty());
        assert_eq!(info.two_sided_identity, None);
        assert!(matches!(inverse_info(&t, 2), Err(Error::NoIdentity)));
    }

    #[test]
    fn identities_and_inverses() {
        assert_eq!(identity_info(&l5()).two_sided_identity, Some(1));
        let one = parse_table("1\n1").unwrap();
        assert_eq!(identity_info(&one).two_sided_identity, Some(1));
        assert_eq!(axiom_profile(&one).kind, SystemKind::Group);
        let inv = inverse_info(&l5(), 3).unwrap();
        assert_eq!(inv.two_sided, Some(3));
        assert!(inverse_info(&l5(), 6).is_err());
    }

    #[test]
    fn non_latin_witnesses() {
        // constant table: semigroup (x*y = 1 is associative), no identity
        let t = parse_table("2\n1 1\n1 1").unwrap();
        let p = axiom_profile(&t);
        assert_eq!(p.kind, SystemKind::Semigroup);
        let w = p.witness_a4.unwrap();
        assert_eq!((w.a, w.b, w.side, w.solutions), (1, 1, Side::Left, 2));
        // monoid: {1,2} under max-with-identity 1: 2*2 = 2
        let m = parse_table("2\n1 2\n2 2").unwrap();
        assert_eq!(axiom_profile(&m).kind, SystemKind::Monoid);
        // groupoid: non-associative, non-latin
        let g = parse_table("2\n2 1\n1 1").unwrap();
        assert_eq!(axiom_profile(&g).kind, SystemKind::Groupoid);
        assert!(axiom_profile(&g).witness_a6.is_some());
    }

    #[test]
    fn loop_without_inverses() {
        // loop of order 5 where 2 has left inverse 3 but right inverse 4
        let t = parse_table("5\n1 2 3 4 5\n2 3 1 5 4\n3 5 4 1 2\n4 1 5 2 3\n5 4 2 3 1").unwrap();
        let p = axiom_profile(&t);
        assert!(p.a4 && p.a2);
        assert!(!p.a3);
        assert_eq!(p.kind, SystemKind::Loop);
        let inv = inverse_info(&t, 2).unwrap();
        assert_ne!(inv.left_inverse, inv.right_inverse);
        assert_eq!(inv.two_sided, None);
    }

    #[test]
    fn classify_covers_table_two() {
        use SystemKind::*;
        assert_eq!(SystemKind::classify(false, false, false, false), Groupoid);
        assert_eq!(SystemKind::classify(false, false, true, false), Quasigroup);
        assert_eq!(SystemKind::classify(true, false, true, false), Loop);
        assert_eq!(SystemKind::classify(true, true, true, false), Nafil);
        assert_eq!(SystemKind::classify(true, true, true, true), Group);
        assert_eq!(SystemKind::classify(false, false, false, true), Semigroup);
        assert_eq!(SystemKind::classify(true, false, false, true), Monoid);
    }
}
