use thiserror::Error;

use crate::partition::Cell;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("parts must be non-increasing positive integers, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("cell ({},{}) lies outside the diagram", .0.row, .0.col)]
    CellOutside(Cell),
    #[error("modulus l must be at least 2, got {0}")]
    ModulusTooSmall(u32),
    #[error("charge vector must sum to zero, got sum {0}")]
    ChargeSumNonzero(i64),
    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("partition is not an {l}-core: {partition}")]
    NotACore { l: u32, partition: String },
    #[error("residue {0} out of range for modulus {1}")]
    ResidueOutOfRange(u32, u32),
    #[error("dimension formula is negative ({0}): empty variety input")]
    NegativeDimension(i64),
    #[error("zero torus weight at a fixed point: non-isolated fixed point")]
    ZeroWeight,
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CombError>;
