use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::error::{Error, Result};
use crate::quotient::{check_subsystem, is_normal};
use crate::set::ElementSet;
use crate::table::{invert_permutation, CayleyTable};

use super::multiphi::{classify_phi_type, compose_unchecked, MultiPhiSystem, PhiType};

/// A loop rewritten as a block product over the cosets of a normal subloop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetDecomposition {
    pub subsystem: ElementSet,
    /// `B1 = H`, then by smallest member.
    pub cells: Vec<ElementSet>,
    /// The factor table over cell indices.
    pub e_table: CayleyTable,
    pub multiphi: MultiPhiSystem,
    /// `relabeling[x-1] = m(p-1) + a` when `x` is the `a`-th element of `B_p`.
    pub relabeling: Vec<usize>,
    pub phi_type: PhiType,
    /// All `φ_pq` identical under this particular labeling. A different
    /// labeling of the cells may still be mono-φ when this is false.
    pub is_mono_phi: bool,
}

/// The identity first, the remaining elements ascending.
fn cell_order(cell: ElementSet, identity: Option<usize>) -> Vec<usize> {
    let mut v = cell.to_vec();
    if let Some(e) = identity {
        if let Some(i) = v.iter().position(|&x| x == e) {
            let e = v.remove(i);
            v.insert(0, e);
        }
    }
    v
}

pub fn decompose(t: &CayleyTable, h: ElementSet) -> Result<CosetDecomposition> {
    check_subsystem(t, h)?;
    let n = t.order();
    let m = h.len();
    if !n.is_multiple_of(m) {
        return Err(Error::OrderMismatch { sub: m, order: n });
    }
    let normality = is_normal(t, h)?;
    if !normality.normal {
        return Err(Error::NotNormal(h));
    }
    let factor = normality.factor.expect("normal results carry a factor");
    let k = factor.cells.len();
    let identity = axioms::identity(t);
    let members: Vec<Vec<usize>> = factor
        .cells
        .iter()
        .enumerate()
        .map(|(i, &c)| cell_order(c, if i == 0 { identity } else { None }))
        .collect();

    // position[x] = (cell, index within cell), both 0-based
    let mut position = vec![(0usize, 0usize); n];
    let mut relabeling = vec![0usize; n];
    for (p, cell) in members.iter().enumerate() {
        for (a, &x) in cell.iter().enumerate() {
            position[x - 1] = (p, a);
            relabeling[x - 1] = m * p + a + 1;
        }
    }

    let mut phi = Vec::with_capacity(k * k);
    for bp in &members {
        for bq in &members {
            let entries = bp
                .iter()
                .flat_map(|&x| bq.iter().map(move |&y| (x, y)))
                .map(|(x, y)| position[t.product(x, y) - 1].1 as u8)
                .collect();
            phi.push(CayleyTable::from_raw(m, entries));
        }
    }
    let multiphi = MultiPhiSystem::new(factor.table.clone(), phi)?;
    let phi_type = classify_phi_type(&multiphi);
    let is_mono_phi = multiphi.is_mono_phi();
    Ok(CosetDecomposition {
        subsystem: h,
        cells: factor.cells,
        e_table: factor.table,
        multiphi,
        relabeling,
        phi_type,
        is_mono_phi,
    })
}

/// Rebuilds the original table from a decomposition.
pub fn recompose(d: &CosetDecomposition) -> Result<CayleyTable> {
    let bad = |msg: String| Error::InconsistentDecomposition(msg);
    let mp = MultiPhiSystem::new(d.multiphi.e_table.clone(), d.multiphi.phi.clone())
        .map_err(|e| bad(e.to_string()))?;
    if mp.e_table != d.e_table {
        return Err(bad("e_table differs from the multi-phi system's E".into()));
    }
    let n = mp.k() * mp.m();
    if n > crate::set::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if d.relabeling.len() != n {
        return Err(bad(format!(
            "relabeling has {} entries, expected {n}",
            d.relabeling.len()
        )));
    }
    let inverse = invert_permutation(&d.relabeling, n)
        .ok_or_else(|| bad("relabeling is not a permutation".into()))?;
    let perm0: Vec<usize> = d.relabeling.iter().map(|&h| h - 1).collect();
    let product = compose_unchecked(&mp);
    Ok(product.relabel0(&inverse, &perm0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_and_mono_phi() {
        let l10 = catalog::table("l10").unwrap();
        let h = ElementSet::from_elements(1..=5);
        let d = decompose(&l10, h).unwrap();
        assert!(d.is_mono_phi);
        assert_eq!(d.multiphi.phi[0], catalog::table("l5").unwrap());
        assert_eq!(d.phi_type, PhiType::TypeA);
        assert_eq!(recompose(&d).unwrap(), l10);
    }

    #[test]
    fn abelian6_pointwise() {
        let t = catalog::table("abelian6").unwrap();
        let d = decompose(&t, ElementSet::from_elements([1, 2])).unwrap();
        assert_eq!(d.e_table.order(), 3);
        assert_eq!(d.multiphi.m(), 2);
        // 3⋄3 = 5, the first element of B3
        assert_eq!(d.multiphi.phi(2, 2).product(1, 1), 1);
        assert_eq!(recompose(&d).unwrap(), t);
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = catalog::table("nafil8").unwrap();
        assert!(matches!(
            decompose(&t, ElementSet::from_elements([1, 7])),
            Err(Error::NotNormal(_))
        ));
        let l5 = catalog::table("l5").unwrap();
        assert!(matches!(
            decompose(&l5, ElementSet::from_elements([1, 2])),
            Err(Error::OrderMismatch { sub: 2, order: 5 })
        ));
        let mut d = decompose(&t, ElementSet::from_elements([1, 2, 3, 4])).unwrap();
        d.relabeling[0] = 2;
        assert!(matches!(
            recompose(&d),
            Err(Error::InconsistentDecomposition(_))
        ));
    }
}
