//! Canonical labeling of loops.
//!
//! The canonical form is the lexicographically least row-major table over all
//! relabelings that send the identity to 1. Label 2 must go to an element `x`
//! whose left translation `y ↦ x⋆y` has the least cycle type: the cycle
//! through the identity as short as possible, the remaining cycles in
//! ascending length. Row 2 is then fixed, and only the order of equally long
//! cycles and their starting points remain free.

use crate::axioms;
use crate::error::{Error, Result};
use crate::table::CayleyTable;

/// Cycle type of a left translation: the length of the cycle through the
/// identity, then the other cycle lengths in ascending order. The derived
/// ordering matches the ordering of the resulting row 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct CycleType {
    pub identity_cycle: usize,
    pub rest: Vec<usize>,
}

impl CycleType {
    /// Packs the type into an integer with the same ordering (orders up to 15).
    pub fn key(&self) -> u64 {
        let mut key = self.identity_cycle as u64;
        for k in 0..15 {
            key = key << 4 | self.rest.get(k).copied().unwrap_or(0) as u64;
        }
        key
    }
}

/// Cycle type of row `x` and its non-identity cycles, 0-based.
pub(crate) fn translation_cycles(
    t: &CayleyTable,
    e: usize,
    x: usize,
) -> (CycleType, Vec<Vec<usize>>) {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut identity_cycle = 0;
    let mut y = e;
    loop {
        seen[y] = true;
        identity_cycle += 1;
        y = t.at(x, y);
        if y == e {
            break;
        }
    }
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut y = start;
        while !seen[y] {
            seen[y] = true;
            cycle.push(y);
            y = t.at(x, y);
        }
        cycles.push(cycle);
    }
    cycles.sort_by_key(Vec::len);
    let rest = cycles.iter().map(Vec::len).collect();
    (
        CycleType {
            identity_cycle,
            rest,
        },
        cycles,
    )
}

/// Cycle type of a complete row given as values, with identity 0.
pub(crate) fn row_cycle_type(row: &[u8]) -> CycleType {
    let n = row.len();
    let mut seen = 0u64;
    let mut identity_cycle = 0;
    let mut y = 0usize;
    loop {
        seen |= 1 << y;
        identity_cycle += 1;
        y = row[y] as usize;
        if y == 0 {
            break;
        }
    }
    let mut rest = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut len = 0;
        let mut y = start;
        while seen & (1 << y) == 0 {
            seen |= 1 << y;
            len += 1;
            y = row[y] as usize;
        }
        rest.push(len);
    }
    rest.sort_unstable();
    CycleType {
        identity_cycle,
        rest,
    }
}

enum Outcome {
    Continue,
    /// A relabeling strictly below the reference table exists.
    FoundSmaller,
}

struct Canonizer<'a> {
    t: &'a CayleyTable,
    n: usize,
    /// Old element → new label.
    sigma: Vec<usize>,
    /// New label → old element.
    tau: Vec<usize>,
    best: Vec<u8>,
    /// Stop at the first strictly smaller relabeling instead of keeping it.
    stop_early: bool,
}

impl Canonizer<'_> {
    /// Compares the relabeled table with `best` from row 3 on (rows 1 and 2
    /// agree for every candidate), replacing `best` when smaller.
    fn consider(&mut self) -> Outcome {
        let n = self.n;
        let mut smaller = false;
        let mut candidate = if self.stop_early {
            Vec::new()
        } else {
            self.best.clone()
        };
        for i in 2..n {
            for j in 1..n {
                let v = self.sigma[self.t.at(self.tau[i], self.tau[j])] as u8;
                let k = i * n + j;
                if !smaller {
                    match v.cmp(&self.best[k]) {
                        std::cmp::Ordering::Greater => return Outcome::Continue,
                        std::cmp::Ordering::Less => {
                            if self.stop_early {
                                return Outcome::FoundSmaller;
                            }
                            smaller = true;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
                if !self.stop_early {
                    candidate[k] = v;
                }
            }
        }
        if smaller {
            self.best = candidate;
        }
        Outcome::Continue
    }

    /// Places the remaining cycles, shortest first, trying every order of
    /// equally long cycles and every starting point.
    fn place(&mut self, cycles: &[Vec<usize>], used: &mut [bool], next_label: usize) -> Outcome {
        let Some(len) = cycles
            .iter()
            .zip(used.iter())
            .filter(|(_, &u)| !u)
            .map(|(c, _)| c.len())
            .min()
        else {
            return self.consider();
        };
        for ci in 0..cycles.len() {
            if used[ci] || cycles[ci].len() != len {
                continue;
            }
            used[ci] = true;
            let cycle = &cycles[ci];
            for start in 0..len {
                for off in 0..len {
                    let y = cycle[(start + off) % len];
                    self.sigma[y] = next_label + off;
                    self.tau[next_label + off] = y;
                }
                if let Outcome::FoundSmaller = self.place(cycles, used, next_label + len) {
                    return Outcome::FoundSmaller;
                }
            }
            used[ci] = false;
        }
        Outcome::Continue
    }

    fn run_from(&mut self, e: usize, x: usize) -> Outcome {
        let (ty, cycles) = translation_cycles(self.t, e, x);
        let mut y = e;
        for label in 0..ty.identity_cycle {
            self.sigma[y] = label;
            self.tau[label] = y;
            y = self.t.at(x, y);
        }
        let mut used = vec![false; cycles.len()];
        self.place(&cycles, &mut used, ty.identity_cycle)
    }
}

/// Elements whose left translation has the least cycle type, with that type.
fn best_translations(t: &CayleyTable, e: usize) -> (CycleType, Vec<usize>) {
    let mut best: Option<CycleType> = None;
    let mut xs = Vec::new();
    for x in (0..t.order()).filter(|&x| x != e) {
        let (ty, _) = translation_cycles(t, e, x);
        match &best {
            Some(b) if ty > *b => {}
            Some(b) if ty == *b => xs.push(x),
            _ => {
                best = Some(ty);
                xs = vec![x];
            }
        }
    }
    (best.expect("order at least 2"), xs)
}

/// Row 2 determined by a cycle type.
fn shape_row(ty: &CycleType) -> Vec<u8> {
    let mut row = Vec::new();
    for j in 0..ty.identity_cycle {
        row.push(if j + 1 == ty.identity_cycle {
            0
        } else {
            j as u8 + 1
        });
    }
    let mut start = ty.identity_cycle;
    for &len in &ty.rest {
        for off in 0..len {
            row.push(if off + 1 == len {
                start as u8
            } else {
                (start + off + 1) as u8
            });
        }
        start += len;
    }
    row
}

/// The canonical representative of a loop's isomorphism class.
pub fn canonical_form(t: &CayleyTable) -> Result<CayleyTable> {
    if !axioms::is_latin(t) {
        return Err(Error::NotALoop);
    }
    let e = axioms::identity0(t).ok_or(Error::NotALoop)?;
    let n = t.order();
    if n == 1 {
        return Ok(CayleyTable::from_raw(1, vec![0]));
    }
    let (ty, xs) = best_translations(t, e);
    let mut c = Canonizer {
        t,
        n,
        sigma: vec![0; n],
        tau: vec![0; n],
        best: vec![u8::MAX; n * n],
        stop_early: false,
    };
    for &x in &xs {
        c.run_from(e, x);
    }
    let mut best = c.best;
    for j in 0..n {
        best[j] = j as u8;
        best[j * n] = j as u8;
    }
    best[n..2 * n].copy_from_slice(&shape_row(&ty));
    Ok(CayleyTable::from_raw(n, best))
}

/// Whether a loop with identity 1 is its own canonical form.
pub(crate) fn is_canonical(t: &CayleyTable) -> bool {
    let n = t.order();
    if n <= 2 {
        return true;
    }
    let (ty, xs) = best_translations(t, 0);
    if t.raw()[n..2 * n] != shape_row(&ty)[..] {
        return false;
    }
    let mut c = Canonizer {
        t,
        n,
        sigma: vec![0; n],
        tau: vec![0; n],
        best: t.raw().to_vec(),
        stop_early: true,
    };
    xs.iter()
        .all(|&x| !matches!(c.run_from(0, x), Outcome::FoundSmaller))
}
