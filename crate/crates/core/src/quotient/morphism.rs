use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::substructure::{closure_unchecked, lattice};
use crate::table::CayleyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismCheck {
    pub holds: bool,
    /// First pair `(a, b)` with `θ(a⋆b) ≠ θ(a)∘θ(b)`.
    pub witness: Option<(usize, usize)>,
}

fn check_map(source: &CayleyTable, target: &CayleyTable, map: &[usize]) -> Result<()> {
    if map.len() != source.order() {
        return Err(Error::BadMapRange(format!(
            "map has {} entries, source order is {}",
            map.len(),
            source.order()
        )));
    }
    if let Some((x, &v)) = map
        .iter()
        .enumerate()
        .find(|&(_, &v)| v == 0 || v > target.order())
    {
        return Err(Error::BadMapRange(format!(
            "{} maps to {v}, outside 1..={}",
            x + 1,
            target.order()
        )));
    }
    Ok(())
}

/// `map[x-1]` is the image of `x`; images are 1-based.
pub fn is_homomorphism(
    source: &CayleyTable,
    target: &CayleyTable,
    map: &[usize],
) -> Result<HomomorphismCheck> {
    check_map(source, target, map)?;
    let n = source.order();
    for a in 1..=n {
        for b in 1..=n {
            let lhs = map[source.product(a, b) - 1];
            let rhs = target.product(map[a - 1], map[b - 1]);
            if lhs != rhs {
                return Ok(HomomorphismCheck {
                    holds: false,
                    witness: Some((a, b)),
                });
            }
        }
    }
    Ok(HomomorphismCheck {
        holds: true,
        witness: None,
    })
}

/// Preimage of the target's identity under a homomorphism.
pub fn kernel(source: &CayleyTable, target: &CayleyTable, map: &[usize]) -> Result<ElementSet> {
    check_map(source, target, map)?;
    let e = axioms::identity(target).ok_or(Error::NoIdentity)?;
    Ok(map
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == e)
        .map(|(x, _)| x + 1)
        .collect())
}

/// Per-element data preserved by every isomorphism.
fn element_invariants(t: &CayleyTable) -> Vec<[usize; 5]> {
    let n = t.order();
    let e = axioms::identity0(t);
    (0..n)
        .map(|x| {
            let mut seed = ElementSet::EMPTY;
            seed.insert0(x);
            if let Some(e) = e {
                seed.insert0(e);
            }
            let generated = closure_unchecked(t, seed).len();
            let commuting = (0..n).filter(|&y| t.at(x, y) == t.at(y, x)).count();
            let idempotent = usize::from(t.at(x, x) == x);
            // Inverse pattern: does x have a two-sided inverse, and is it x itself?
            let inverse = match e {
                Some(e) => {
                    let r = (0..n).find(|&y| t.at(x, y) == e);
                    let l = (0..n).find(|&y| t.at(y, x) == e);
                    match (l, r) {
                        (Some(l), Some(r)) if l == r && l == x => 1,
                        (Some(l), Some(r)) if l == r => 2,
                        _ => 3,
                    }
                }
                None => 0,
            };
            let square_generated = {
                let mut s = ElementSet::EMPTY;
                s.insert0(t.at(x, x));
                closure_unchecked(t, s).len()
            };
            [generated, commuting, idempotent, inverse, square_generated]
        })
        .collect()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

struct Matcher<'a> {
    a: &'a CayleyTable,
    b: &'a CayleyTable,
    inv_a: Vec<[usize; 5]>,
    inv_b: Vec<[usize; 5]>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    domain: Vec<usize>,
}

impl Matcher<'_> {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] || self.inv_a[x] != self.inv_b[y] {
            return false;
        }
        self.map[x] = Some(y);
        self.used[y] = true;
        self.domain.push(x);
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.domain.len() > len {
            let x = self.domain.pop().expect("nonempty");
            let y = self.map[x].take().expect("mapped");
            self.used[y] = false;
        }
    }

    /// Extends the map over products of mapped elements; false on conflict.
    fn propagate(&mut self, start: usize) -> bool {
        let mut k = start;
        while k < self.domain.len() {
            let x = self.domain[k];
            for i in 0..=k {
                let z = self.domain[i];
                for (p, q) in [(x, z), (z, x)] {
                    let prod = self.a.at(p, q);
                    let image = self.b.at(self.map[p].unwrap(), self.map[q].unwrap());
                    match self.map[prod] {
                        Some(v) if v == image => {}
                        Some(_) => return false,
                        None => {
                            if !self.assign(prod, image) {
                                return false;
                            }
                        }
                    }
                }
            }
            k += 1;
        }
        true
    }

    fn search(&mut self) -> bool {
        let Some(x) = (0..self.a.order()).find(|&x| self.map[x].is_none()) else {
            return true;
        };
        for y in 0..self.b.order() {
            let len = self.domain.len();
            if self.assign(x, y) && self.propagate(len) && self.search() {
                return true;
            }
            self.undo_to(len);
        }
        false
    }
}

/// An isomorphism `a → b` as a 1-based image list, if one exists.
pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if axioms::is_commutative(a) != axioms::is_commutative(b) {
        return None;
    }
    let ea = axioms::identity0(a);
    let eb = axioms::identity0(b);
    if ea.is_some() != eb.is_some() {
        return None;
    }
    let inv_a = element_invariants(a);
    let inv_b = element_invariants(b);
    if sorted(&inv_a) != sorted(&inv_b) {
        return None;
    }
    if let (Some(ea), Some(eb)) = (ea, eb) {
        if axioms::is_latin(a) && axioms::is_latin(b) {
            let orders = |t, e| sorted(&lattice(t, e).iter().map(|s| s.len()).collect::<Vec<_>>());
            if orders(a, ea) != orders(b, eb) {
                return None;
            }
        }
    }
    let n = a.order();
    let mut m = Matcher {
        a,
        b,
        inv_a,
        inv_b,
        map: vec![None; n],
        used: vec![false; n],
        domain: Vec::with_capacity(n),
    };
    if let (Some(ea), Some(eb)) = (ea, eb) {
        if !m.assign(ea, eb) || !m.propagate(0) {
            return None;
        }
    }
    m.search()
        .then(|| m.map.iter().map(|v| v.expect("total") + 1).collect())
}
