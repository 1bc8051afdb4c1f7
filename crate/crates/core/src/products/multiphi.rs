use serde::{Deserialize, Serialize};

use crate::axioms::{self, identity_info};
use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ORDER};
use crate::table::CayleyTable;

/// A generating pair for a block product: `(E,∗)` of order `k` and `k²`
/// local operations `φ_pq` on a common carrier of order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiPhiSystem {
    pub e_table: CayleyTable,
    /// `φ_pq` at index `(p-1)·k + (q-1)`.
    pub phi: Vec<CayleyTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl MultiPhiSystem {
    /// Checks shapes only; quasigroup conditions are checked where needed.
    pub fn new(e_table: CayleyTable, phi: Vec<CayleyTable>) -> Result<Self> {
        let k = e_table.order();
        if phi.len() != k * k {
            return Err(Error::ShapeMismatch(format!(
                "expected {} phi tables for k = {k}, found {}",
                k * k,
                phi.len()
            )));
        }
        let m = phi[0].order();
        if let Some(i) = phi.iter().position(|f| f.order() != m) {
            return Err(Error::ShapeMismatch(format!(
                "phi_{}{} has order {}, expected {m}",
                i / k + 1,
                i % k + 1,
                phi[i].order()
            )));
        }
        Ok(MultiPhiSystem {
            e_table,
            phi,
            name: None,
        })
    }

    /// Every `φ_pq` equal to `c`.
    pub fn mono(e_table: CayleyTable, c: CayleyTable) -> Self {
        let k = e_table.order();
        MultiPhiSystem {
            phi: vec![c; k * k],
            e_table,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn k(&self) -> usize {
        self.e_table.order()
    }

    pub fn m(&self) -> usize {
        self.phi[0].order()
    }

    /// `φ_pq`, 1-based.
    pub fn phi(&self, p: usize, q: usize) -> &CayleyTable {
        &self.phi[(p - 1) * self.k() + (q - 1)]
    }

    /// All `φ_pq` are identical tables.
    pub fn is_mono_phi(&self) -> bool {
        self.phi.iter().all(|f| *f == self.phi[0])
    }
}

/// Flattened index of `(e_p, c_a)`: `m(p-1) + a`.
pub fn pair_index(m: usize, p: usize, a: usize) -> usize {
    m * (p - 1) + a
}

/// Inverse of [`pair_index`].
pub fn index_pair(m: usize, h: usize) -> (usize, usize) {
    ((h - 1) / m + 1, (h - 1) % m + 1)
}

/// `(e_p,c_a) ⋄ (e_q,c_b) = (e_p ∗ e_q, c_a φ_pq c_b)` without any checks on
/// the operations. Panics if the order exceeds 64.
pub fn compose_unchecked(mp: &MultiPhiSystem) -> CayleyTable {
    let k = mp.k();
    let m = mp.m();
    let n = k * m;
    assert!(n <= MAX_ORDER, "product order {n} exceeds {MAX_ORDER}");
    let mut entries = Vec::with_capacity(n * n);
    for p in 0..k {
        for a in 0..m {
            for q in 0..k {
                let f = &mp.phi[p * k + q];
                let pq = mp.e_table.at(p, q);
                for b in 0..m {
                    entries.push((m * pq + f.at(a, b)) as u8);
                }
            }
        }
    }
    CayleyTable::from_raw(n, entries)
}

fn check_order(k: usize, m: usize) -> Result<()> {
    if k * m > MAX_ORDER {
        return Err(Error::OrderTooLarge(k * m));
    }
    Ok(())
}

pub fn block_product(mp: &MultiPhiSystem) -> Result<CayleyTable> {
    MultiPhiSystem::new(mp.e_table.clone(), mp.phi.clone())?;
    check_order(mp.k(), mp.m())?;
    if !axioms::is_latin(&mp.e_table) {
        return Err(Error::ENotQuasigroup);
    }
    let k = mp.k();
    if let Some(i) = mp.phi.iter().position(|f| !axioms::is_latin(f)) {
        return Err(Error::PhiNotQuasigroup {
            p: i / k + 1,
            q: i % k + 1,
        });
    }
    Ok(compose_unchecked(mp))
}

/// The mono-φ block product `E × C`.
pub fn direct_product(e: &CayleyTable, c: &CayleyTable) -> Result<CayleyTable> {
    check_order(e.order(), c.order())?;
    Ok(compose_unchecked(&MultiPhiSystem::mono(
        e.clone(),
        c.clone(),
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhiType {
    /// One element is a two-sided identity of every `φ_pq`.
    TypeA,
    /// Every `φ_pq` is a loop, without a common identity.
    TypeB,
    /// Some `φ_pq` is not a loop.
    Irregular,
}

pub fn classify_phi_type(mp: &MultiPhiSystem) -> PhiType {
    let m = mp.m();
    let mut common = ElementSet::full(m).bits();
    let mut all_loops = true;
    for f in &mp.phi {
        let info = identity_info(f);
        common &= info
            .left_identities
            .intersection(info.right_identities)
            .bits();
        all_loops &= axioms::is_loop(f);
    }
    if common != 0 {
        PhiType::TypeA
    } else if all_loops {
        PhiType::TypeB
    } else {
        PhiType::Irregular
    }
}
