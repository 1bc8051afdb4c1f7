use thiserror::Error;

use crate::set::ElementSet;

/// Failures while reading `.tbl` or `.mphi` text.
///
/// Row and column numbers are 1-based and refer to the table body; `line`
/// is the 1-based line number in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("bad header on line {line}: `{token}`")]
    BadHeader { line: usize, token: String },
    #[error("order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("table is not square: line {line} has {found} entries, expected {expected}")]
    NotSquare {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("table is not square: expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("bad entry `{token}` on line {line}")]
    BadToken { line: usize, token: String },
    #[error("entry at row {row}, column {col} is {value}, outside 1..={order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("trailing content on line {line}: `{token}`")]
    TrailingContent { line: usize, token: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("table is not a loop (needs A1, A4 and a two-sided identity)")]
    NotALoop,
    #[error("table is not an invertible loop")]
    NotInvertibleLoop,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("empty seed set")]
    EmptySeed,
    #[error("element {element} outside 1..={order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("{0} is not a subsystem (not closed under the operation)")]
    NotASubsystem(ElementSet),
    #[error("{0} is not a normal subsystem")]
    NotNormal(ElementSet),
    #[error("subsystem order {sub} does not divide table order {order}")]
    OrderMismatch { sub: usize, order: usize },
    #[error("map is not a valid function between the two tables: {0}")]
    BadMapRange(String),
    #[error("multi-phi system shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("phi_{p}{q} is not a quasigroup")]
    PhiNotQuasigroup { p: usize, q: usize },
    #[error("generating table E is not a quasigroup")]
    ENotQuasigroup,
    #[error("product order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("unsupported search order {0} (supported: 1..=8)")]
    UnsupportedOrder(usize),
    #[error("invalid search spec: {0}")]
    InvalidSearchSpec(String),
    #[error("unknown catalog id `{id}`; valid ids: {valid}")]
    UnknownId { id: String, valid: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
