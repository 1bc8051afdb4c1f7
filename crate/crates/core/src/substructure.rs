//! Closure, the subsystem lattice and Lagrangian classification.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::axioms::{self, axiom_profile, SystemKind};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::CayleyTable;

/// Smallest superset of `seed` closed under the operation.
pub fn closure(t: &CayleyTable, seed: ElementSet) -> Result<ElementSet> {
    t.check_subset(seed)?;
    Ok(closure_unchecked(t, seed))
}

/// Incremental fixpoint: only products involving a newly added element are
/// computed in each round.
pub(crate) fn closure_unchecked(t: &CayleyTable, seed: ElementSet) -> ElementSet {
    let mut set = seed;
    let mut frontier = seed;
    while !frontier.is_empty() {
        let mut added = ElementSet::EMPTY;
        for a in frontier.iter0() {
            for b in set.iter0() {
                for v in [t.at(a, b), t.at(b, a)] {
                    if !set.contains0(v) {
                        added.insert0(v);
                    }
                }
            }
        }
        // Products among the newly added elements are picked up next round.
        set = set.union(added);
        frontier = added;
    }
    set
}

pub fn is_closed(t: &CayleyTable, subset: ElementSet) -> bool {
    subset
        .iter0()
        .all(|a| subset.iter0().all(|b| subset.contains0(t.at(a, b))))
}

/// True iff `subset` is nonempty, inside the table and closed.
pub fn is_subsystem(t: &CayleyTable, subset: ElementSet) -> bool {
    t.check_subset(subset).is_ok() && is_closed(t, subset)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LagrangianClass {
    /// Every nontrivial proper subsystem order divides n.
    Lagrangian,
    /// Some, but not all, nontrivial proper subsystem orders fail to divide n.
    NonLagrangian,
    /// No nontrivial proper subsystem order divides n.
    AntiLagrangian,
    /// There is no nontrivial proper subsystem.
    NoNontrivial,
}

impl LagrangianClass {
    /// Non-Lagrangian in the broad sense: at least one non-divisor order.
    pub fn is_non_lagrangian(self) -> bool {
        matches!(
            self,
            LagrangianClass::NonLagrangian | LagrangianClass::AntiLagrangian
        )
    }

    pub fn describe(self) -> &'static str {
        match self {
            LagrangianClass::Lagrangian => "Lagrangian",
            LagrangianClass::NonLagrangian => "non-Lagrangian",
            LagrangianClass::AntiLagrangian => "non-Lagrangian (anti-Lagrangian)",
            LagrangianClass::NoNontrivial => "no nontrivial subsystems",
        }
    }

    fn from_orders(n: usize, orders: impl IntoIterator<Item = usize>) -> Self {
        let mut divisors = 0;
        let mut non_divisors = 0;
        for m in orders {
            if n.is_multiple_of(m) {
                divisors += 1;
            } else {
                non_divisors += 1;
            }
        }
        match (divisors, non_divisors) {
            (0, 0) => LagrangianClass::NoNontrivial,
            (_, 0) => LagrangianClass::Lagrangian,
            (0, _) => LagrangianClass::AntiLagrangian,
            _ => LagrangianClass::NonLagrangian,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subsystem {
    pub elements: ElementSet,
    pub order: usize,
    pub is_group: bool,
    pub is_divisor: bool,
    pub kind: SystemKind,
    pub label: String,
    /// The identity alone.
    pub trivial: bool,
    /// The whole table.
    pub improper: bool,
}

impl Subsystem {
    fn new(t: &CayleyTable, elements: ElementSet) -> Self {
        let induced = t.induced(elements).expect("lattice members are closed");
        let profile = axiom_profile(&induced);
        Subsystem {
            elements,
            order: elements.len(),
            is_group: profile.kind == SystemKind::Group,
            is_divisor: t.order().is_multiple_of(elements.len()),
            kind: profile.kind,
            label: profile.label,
            trivial: elements.len() == 1,
            improper: elements.len() == t.order(),
        }
    }

    pub fn is_nontrivial_proper(&self) -> bool {
        !self.trivial && !self.improper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemReport {
    pub parent_order: usize,
    /// Sorted by order, then by element list; includes the trivial and the
    /// improper subsystem.
    pub subsystems: Vec<Subsystem>,
    pub lagrangian_class: LagrangianClass,
}

impl SubsystemReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Subsystem> {
        self.subsystems.iter().filter(|s| s.is_nontrivial_proper())
    }

    pub fn nontrivial_sets(&self) -> Vec<ElementSet> {
        self.nontrivial().map(|s| s.elements).collect()
    }

    /// Composite: at least one nontrivial proper subsystem.
    pub fn is_composite(&self) -> bool {
        self.nontrivial().next().is_some()
    }
}

/// Element sets of every subloop of a loop, sorted by order then elements.
pub fn subloop_sets(t: &CayleyTable) -> Result<Vec<ElementSet>> {
    let e = axioms::identity0(t).ok_or(Error::NotALoop)?;
    if !axioms::is_latin(t) {
        return Err(Error::NotALoop);
    }
    Ok(lattice(t, e))
}

/// Worklist over known subloops; each is extended by one generator at a time.
pub(crate) fn lattice(t: &CayleyTable, e: usize) -> Vec<ElementSet> {
    let full = t.elements();
    let mut bottom = ElementSet::EMPTY;
    bottom.insert0(e);
    let mut seen: HashSet<u64> = HashSet::from([bottom.bits()]);
    let mut found = vec![bottom];
    let mut next = 0;
    while next < found.len() {
        let h = found[next];
        next += 1;
        for x in full.difference(h).iter0() {
            let mut seed = h;
            seed.insert0(x);
            let c = closure_unchecked(t, seed);
            if seen.insert(c.bits()) {
                found.push(c);
            }
        }
    }
    found.sort();
    found
}

pub fn subsystems(t: &CayleyTable) -> Result<SubsystemReport> {
    let sets = subloop_sets(t)?;
    let n = t.order();
    let subsystems: Vec<Subsystem> = sets.into_iter().map(|s| Subsystem::new(t, s)).collect();
    let lagrangian_class = LagrangianClass::from_orders(
        n,
        subsystems
            .iter()
            .filter(|s| s.is_nontrivial_proper())
            .map(|s| s.order),
    );
    Ok(SubsystemReport {
        parent_order: n,
        subsystems,
        lagrangian_class,
    })
}

pub fn lagrangian_class(t: &CayleyTable) -> Result<LagrangianClass> {
    let n = t.order();
    let sets = subloop_sets(t)?;
    Ok(LagrangianClass::from_orders(
        n,
        sets.iter().map(|s| s.len()).filter(|&m| m > 1 && m < n),
    ))
}

/// True iff the loop has at least one nontrivial proper subloop.
pub(crate) fn has_nontrivial_subloop(t: &CayleyTable, e: usize) -> bool {
    let n = t.order();
    (0..n).filter(|&x| x != e).any(|x| {
        let mut seed = ElementSet::EMPTY;
        seed.insert0(e);
        seed.insert0(x);
        closure_unchecked(t, seed).len() < n
    })
}
