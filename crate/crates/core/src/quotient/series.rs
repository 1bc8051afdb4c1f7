use crate::axioms;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::CayleyTable;

use super::cosets::factor;
use super::nuclei::nuclei_unchecked;

/// `[{e}, Z1, Z2, ...]`, where `Z(i+1)` is the preimage of the center of
/// `L/Zi`. Stops once the chain stops growing or reaches the whole loop.
pub fn ascending_central_series(t: &CayleyTable) -> Result<Vec<ElementSet>> {
    if !axioms::is_invertible_loop(t) {
        return Err(Error::NotInvertibleLoop);
    }
    let e = axioms::identity(t).expect("loops have an identity");
    let full = t.elements();
    let mut series = vec![ElementSet::singleton(e)];
    loop {
        let z = *series.last().expect("nonempty");
        if z == full {
            break;
        }
        let f = factor(t, z)?;
        let center = nuclei_unchecked(&f.table).center;
        let next = center
            .iter()
            .fold(ElementSet::EMPTY, |acc, i| acc.union(f.cells[i - 1]));
        if next == z {
            break;
        }
        series.push(next);
    }
    Ok(series)
}
