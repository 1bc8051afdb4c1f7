pub mod axioms;
pub mod catalog;
pub mod error;
pub mod products;
pub mod quotient;
pub mod report;
pub mod search;
pub mod set;
pub mod substructure;
pub mod table;
