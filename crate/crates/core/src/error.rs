use thiserror::Error;

use crate::lattice::ExponentVector;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("set is not division-closed: {element} is present but {missing} is not")]
    NotDivisionClosed {
        element: ExponentVector,
        missing: ExponentVector,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("operation requires a nonempty order ideal")]
    EmptyIdeal,

    #[error("{0} is not an element of the order ideal")]
    NotAnElement(ExponentVector),

    #[error("direction index {index} out of range for dimension {dim}")]
    DirectionOutOfRange { index: usize, dim: usize },

    #[error("parameter {name} must be a nonnegative integer, got {value}")]
    NotNonnegativeInteger { name: String, value: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
