use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("partitions of different weights ({0} and {1}) are incomparable")]
    WeightMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("entry {0} does not occur in the tableau")]
    EntryNotFound(usize),
    #[error("operands live in different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is outside the scope of orthogonal duality")]
    EvenCharacteristic,
    #[error("loop parameter mismatch: tensor space exists only at delta = {expected}")]
    DeltaMismatch { expected: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
