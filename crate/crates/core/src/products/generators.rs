//! Necessary conditions on the generators of an invertible coset product.

use serde::{Deserialize, Serialize};

use crate::axioms::{self, inverse_map0};
use crate::table::CayleyTable;

use super::multiphi::MultiPhiSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum GeneratorViolation {
    /// (a): `E` is not an invertible loop.
    ENotInvertibleLoop,
    /// (a): the identity of `E` is not its first element.
    EIdentityNotFirst,
    /// (b1): `φ_pq` is not a quasigroup.
    PhiNotQuasigroup { p: usize, q: usize },
    /// (b1): `c1` is not a right identity of `φ_p1`.
    NotRightIdentity { p: usize, q: usize },
    /// (b1): `c1` is not a left identity of `φ_1q`.
    NotLeftIdentity { p: usize, q: usize },
    /// (b2): `φ_pq` is not a loop with identity `c1`.
    NotLoopWithIdentityC1 { p: usize, q: usize },
    /// (b2): `φ_pq = φ_qp` but the loop is not invertible.
    EqualButNotInvertible { p: usize, q: usize },
    /// (b2): `φ_pq ≠ φ_qp` and the one-sided inverses do not match up.
    InverseMismatch { p: usize, q: usize },
}

/// How the one-sided inverses of an inverse pair `φ_pq`, `φ_qp` relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseReadings {
    pub p: usize,
    pub q: usize,
    pub equal_tables: bool,
    /// Every left inverse in `φ_pq` is the right inverse in `φ_qp`.
    pub left_pq_is_right_qp: bool,
    /// Every right inverse in `φ_pq` is the left inverse in `φ_qp`.
    pub right_pq_is_left_qp: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub valid: bool,
    pub violations: Vec<GeneratorViolation>,
    pub inverse_pairs: Vec<InverseReadings>,
}

/// For each `x` (0-based), the unique `y` with `y φ x = c1`.
fn left_inverses(f: &CayleyTable) -> Vec<usize> {
    let n = f.order();
    (0..n)
        .map(|x| (0..n).find(|&y| f.at(y, x) == 0).expect("latin"))
        .collect()
}

/// For each `x` (0-based), the unique `y` with `x φ y = c1`.
fn right_inverses(f: &CayleyTable) -> Vec<usize> {
    let n = f.order();
    (0..n)
        .map(|x| (0..n).find(|&y| f.at(x, y) == 0).expect("latin"))
        .collect()
}

fn loop_with_c1(f: &CayleyTable) -> bool {
    axioms::is_latin(f) && axioms::identity0(f) == Some(0)
}

/// Checks the conditions an invertible coset product forces on its
/// generators, with `c1` (element 1) as the distinguished element, and lists
/// every violated clause.
pub fn validate_generators(mp: &MultiPhiSystem) -> GeneratorReport {
    let k = mp.k();
    let m = mp.m();
    let mut violations = Vec::new();
    let mut inverse_pairs = Vec::new();

    let e_inverse = if axioms::is_invertible_loop(&mp.e_table) {
        if axioms::identity0(&mp.e_table) != Some(0) {
            violations.push(GeneratorViolation::EIdentityNotFirst);
        }
        inverse_map0(&mp.e_table)
    } else {
        violations.push(GeneratorViolation::ENotInvertibleLoop);
        None
    };

    for p in 1..=k {
        for q in 1..=k {
            let f = mp.phi(p, q);
            if !axioms::is_latin(f) {
                violations.push(GeneratorViolation::PhiNotQuasigroup { p, q });
                continue;
            }
            if q == 1 && (0..m).any(|y| f.at(y, 0) != y) {
                violations.push(GeneratorViolation::NotRightIdentity { p, q });
            }
            if p == 1 && (0..m).any(|y| f.at(0, y) != y) {
                violations.push(GeneratorViolation::NotLeftIdentity { p, q });
            }
        }
    }

    if let Some(inv) = e_inverse {
        for p in 2..=k {
            let q = inv[p - 1] + 1;
            if q < p || q == 1 {
                continue;
            }
            let (fpq, fqp) = (mp.phi(p, q), mp.phi(q, p));
            let mut loops = true;
            for (a, b, f) in [(p, q, fpq), (q, p, fqp)] {
                if !loop_with_c1(f) {
                    loops = false;
                    violations.push(GeneratorViolation::NotLoopWithIdentityC1 { p: a, q: b });
                }
            }
            if !loops {
                continue;
            }
            let equal_tables = fpq == fqp;
            let left_pq_is_right_qp = left_inverses(fpq) == right_inverses(fqp);
            let right_pq_is_left_qp = right_inverses(fpq) == left_inverses(fqp);
            inverse_pairs.push(InverseReadings {
                p,
                q,
                equal_tables,
                left_pq_is_right_qp,
                right_pq_is_left_qp,
            });
            if equal_tables {
                if !axioms::is_invertible_loop(fpq) {
                    violations.push(GeneratorViolation::EqualButNotInvertible { p, q });
                }
            } else if !(left_pq_is_right_qp && right_pq_is_left_qp) {
                violations.push(GeneratorViolation::InverseMismatch { p, q });
            }
        }
    }

    GeneratorReport {
        valid: violations.is_empty(),
        violations,
        inverse_pairs,
    }
}
