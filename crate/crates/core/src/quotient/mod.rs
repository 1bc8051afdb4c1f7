//! Cosets, normality and factor systems, nuclei and center, simplicity,
//! homomorphisms and isomorphism, and the ascending central series.

mod cosets;
mod morphism;
mod nuclei;
mod series;

pub use cosets::{
    cell_factor, coset, coset_partition, factor, is_normal, CellWitness, CosetDefect,
    CosetPartitionResult, CosetWitness, FactorSystem, NormalityFailure, NormalityResult,
};
pub use morphism::{are_isomorphic, is_homomorphism, kernel, HomomorphismCheck};
pub use nuclei::{center, is_plain, is_simple, nuclei, NucleusReport};
pub use series::ascending_central_series;

pub(crate) use cosets::check_subsystem;
