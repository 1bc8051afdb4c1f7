use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::substructure::{has_nontrivial_subloop, subloop_sets};
use crate::table::CayleyTable;

use super::cosets::is_normal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NucleusReport {
    /// `a(xy) = (ax)y` for all `x, y`.
    pub left: ElementSet,
    /// `x(ay) = (xa)y` for all `x, y`.
    pub middle: ElementSet,
    /// `x(ya) = (xy)a` for all `x, y`.
    pub right: ElementSet,
    pub nucleus: ElementSet,
    /// Nucleus elements commuting with everything.
    pub center: ElementSet,
}

fn require_loop(t: &CayleyTable) -> Result<()> {
    if axioms::is_loop(t) {
        Ok(())
    } else {
        Err(Error::NotALoop)
    }
}

fn require_invertible(t: &CayleyTable) -> Result<usize> {
    if axioms::is_invertible_loop(t) {
        Ok(axioms::identity0(t).expect("loops have an identity"))
    } else {
        Err(Error::NotInvertibleLoop)
    }
}

pub fn nuclei(t: &CayleyTable) -> Result<NucleusReport> {
    require_loop(t)?;
    Ok(nuclei_unchecked(t))
}

pub(crate) fn nuclei_unchecked(t: &CayleyTable) -> NucleusReport {
    let n = t.order();
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
    let mut left = ElementSet::EMPTY;
    let mut middle = ElementSet::EMPTY;
    let mut right = ElementSet::EMPTY;
    let mut center = ElementSet::EMPTY;
    for a in 0..n {
        let l = all(&|x, y| t.at(a, t.at(x, y)) == t.at(t.at(a, x), y));
        let m = all(&|x, y| t.at(x, t.at(a, y)) == t.at(t.at(x, a), y));
        let r = all(&|x, y| t.at(x, t.at(y, a)) == t.at(t.at(x, y), a));
        if l {
            left.insert0(a);
        }
        if m {
            middle.insert0(a);
        }
        if r {
            right.insert0(a);
        }
        if l && m && r && (0..n).all(|x| t.at(a, x) == t.at(x, a)) {
            center.insert0(a);
        }
    }
    NucleusReport {
        left,
        middle,
        right,
        nucleus: left.intersection(middle).intersection(right),
        center,
    }
}

pub fn center(t: &CayleyTable) -> Result<ElementSet> {
    Ok(nuclei(t)?.center)
}

/// No nontrivial proper normal subsystem.
pub fn is_simple(t: &CayleyTable) -> Result<bool> {
    require_invertible(t)?;
    let n = t.order();
    for h in subloop_sets(t)? {
        if h.len() > 1 && h.len() < n && is_normal(t, h)?.normal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No nontrivial proper subsystem at all.
pub fn is_plain(t: &CayleyTable) -> Result<bool> {
    let e = require_invertible(t)?;
    Ok(!has_nontrivial_subloop(t, e))
}
