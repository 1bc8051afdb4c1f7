use serde::{Deserialize, Serialize};

use crate::axioms::{self, Side};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::substructure::is_closed;
use crate::table::CayleyTable;

pub(crate) fn check_subsystem(t: &CayleyTable, h: ElementSet) -> Result<()> {
    t.check_subset(h)?;
    if !is_closed(t, h) {
        return Err(Error::NotASubsystem(h));
    }
    Ok(())
}

pub(crate) fn coset0(t: &CayleyTable, h: ElementSet, a: usize, side: Side) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for x in h.iter0() {
        out.insert0(match side {
            Side::Left => t.at(a, x),
            Side::Right => t.at(x, a),
        });
    }
    out
}

/// `aH` (left) or `Ha` (right).
pub fn coset(t: &CayleyTable, h: ElementSet, a: usize, side: Side) -> Result<ElementSet> {
    check_subsystem(t, h)?;
    t.check_element(a)?;
    Ok(coset0(t, h, a - 1, side))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CosetDefect {
    /// `aH` meets an earlier coset without being equal to it.
    Overlap,
    /// `aH ≠ Ha`.
    LeftRightDiffer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetWitness {
    pub element: usize,
    pub side: Side,
    pub defect: CosetDefect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPartitionResult {
    pub subsystem: ElementSet,
    /// Distinct left cosets: `H` first, then by smallest member.
    pub cells: Vec<ElementSet>,
    pub partitions: bool,
    pub left_equals_right: bool,
    /// First overlap if the cosets do not partition, otherwise the first
    /// element with `aH ≠ Ha`.
    pub witness: Option<CosetWitness>,
}

pub fn coset_partition(t: &CayleyTable, h: ElementSet) -> Result<CosetPartitionResult> {
    check_subsystem(t, h)?;
    let n = t.order();
    let mut cells: Vec<ElementSet> = vec![h];
    let mut overlap = None;
    let mut differ = None;
    for a in 0..n {
        let left = coset0(t, h, a, Side::Left);
        if differ.is_none() && left != coset0(t, h, a, Side::Right) {
            differ = Some(a + 1);
        }
        if cells.contains(&left) {
            continue;
        }
        if overlap.is_none() && cells.iter().any(|c| !c.is_disjoint(left)) {
            overlap = Some(a + 1);
        }
        cells.push(left);
    }
    cells[1..].sort_by_key(|c| ElementSet::min(*c));
    let witness = match (overlap, differ) {
        (Some(a), _) => Some(CosetWitness {
            element: a,
            side: Side::Left,
            defect: CosetDefect::Overlap,
        }),
        (None, Some(a)) => Some(CosetWitness {
            element: a,
            side: Side::Right,
            defect: CosetDefect::LeftRightDiffer,
        }),
        (None, None) => None,
    };
    Ok(CosetPartitionResult {
        subsystem: h,
        cells,
        partitions: overlap.is_none(),
        left_equals_right: differ.is_none(),
        witness,
    })
}

/// Two products from the same pair of cells that land in different cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellWitness {
    /// 1-based cell indices of the factors.
    pub cells: (usize, usize),
    /// `(a, b, a⋆b)`.
    pub first: (usize, usize, usize),
    pub second: (usize, usize, usize),
    /// 1-based cells containing the two products.
    pub product_cells: (usize, usize),
}

impl std::fmt::Display for CellWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b, x) = self.first;
        let (c, d, y) = self.second;
        write!(
            f,
            "ℓ{a}⋄ℓ{b}=ℓ{x} (B{}) vs ℓ{c}⋄ℓ{d}=ℓ{y} (B{})",
            self.product_cells.0, self.product_cells.1
        )
    }
}

/// Cell multiplication for an arbitrary partition.
///
/// Cell pairs are scanned with `p` outer and `q` inner; inside a pair the
/// products are scanned row-major and each is compared with the previous one,
/// so a witness is always two consecutive products of the scan.
pub fn cell_factor(t: &CayleyTable, cells: &[ElementSet]) -> Result<CayleyTable, CellWitness> {
    let n = t.order();
    let k = cells.len();
    let mut cell_of = vec![0usize; n];
    for (i, c) in cells.iter().enumerate() {
        for x in c.iter0() {
            cell_of[x] = i;
        }
    }
    let mut entries = Vec::with_capacity(k * k);
    for (p, bp) in cells.iter().enumerate() {
        for (q, bq) in cells.iter().enumerate() {
            let mut prev: Option<(usize, usize, usize)> = None;
            for a in bp.iter0() {
                for b in bq.iter0() {
                    let v = t.at(a, b);
                    if let Some((pa, pb, pv)) = prev {
                        if cell_of[pv] != cell_of[v] {
                            return Err(CellWitness {
                                cells: (p + 1, q + 1),
                                first: (pa + 1, pb + 1, pv + 1),
                                second: (a + 1, b + 1, v + 1),
                                product_cells: (cell_of[pv] + 1, cell_of[v] + 1),
                            });
                        }
                    }
                    prev = Some((a, b, v));
                }
            }
            let (_, _, v) = prev.expect("cells are nonempty");
            entries.push(cell_of[v] as u8);
        }
    }
    Ok(CayleyTable::from_raw(k, entries))
}

/// The stage of the normality pipeline that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalityFailure {
    NotAPartition,
    NotWellDefined,
    FactorNotALoop,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSystem {
    /// `B1` is the identity's cell, the rest are ordered by smallest member.
    pub cells: Vec<ElementSet>,
    /// Cell multiplication over cell indices `1..=k`.
    pub table: CayleyTable,
    pub well_defined: bool,
}

impl FactorSystem {
    /// The projection `x ↦ index of the cell containing x`, 1-based.
    pub fn projection(&self) -> Vec<usize> {
        let n: usize = self.cells.iter().map(|c| c.len()).sum();
        let mut map = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for x in c.iter0() {
                map[x] = i + 1;
            }
        }
        map
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityResult {
    pub subsystem: ElementSet,
    pub normal: bool,
    pub partition: CosetPartitionResult,
    pub failure: Option<NormalityFailure>,
    pub cell_witness: Option<CellWitness>,
    pub factor: Option<FactorSystem>,
}

/// Normality as a pipeline: the left cosets must partition the table, cell
/// multiplication must be well defined on every pair of cells, and the
/// resulting table must be a loop.
pub fn is_normal(t: &CayleyTable, h: ElementSet) -> Result<NormalityResult> {
    let partition = coset_partition(t, h)?;
    let mut result = NormalityResult {
        subsystem: h,
        normal: false,
        partition,
        failure: None,
        cell_witness: None,
        factor: None,
    };
    if !result.partition.partitions {
        result.failure = Some(NormalityFailure::NotAPartition);
        return Ok(result);
    }
    let mut cells = result.partition.cells.clone();
    if let Some(e) = axioms::identity(t) {
        if let Some(i) = cells.iter().position(|c| c.contains(e)) {
            let b1 = cells.remove(i);
            cells.insert(0, b1);
        }
    }
    match cell_factor(t, &cells) {
        Err(w) => {
            result.failure = Some(NormalityFailure::NotWellDefined);
            result.cell_witness = Some(w);
        }
        Ok(table) => {
            if axioms::is_loop(&table) {
                result.normal = true;
            } else {
                result.failure = Some(NormalityFailure::FactorNotALoop);
            }
            result.factor = Some(FactorSystem {
                cells,
                table,
                well_defined: true,
            });
        }
    }
    Ok(result)
}

/// The factor system of a normal subsystem.
pub fn factor(t: &CayleyTable, h: ElementSet) -> Result<FactorSystem> {
    let r = is_normal(t, h)?;
    if !r.normal {
        return Err(Error::NotNormal(h));
    }
    Ok(r.factor.expect("normal results carry a factor"))
}
