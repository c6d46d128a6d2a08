use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("basis index {index} out of range for dimension {dim}")]
    BadIndex { index: usize, dim: usize },
    #[error("bracket indices must be strictly increasing: {0:?}")]
    NonIncreasingIndices(Vec<usize>),
    #[error("expected {expected} arguments or coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("arity {n} with dimension {d} is not supported (need 2 <= n <= d <= 8)")]
    BadShape { n: usize, d: usize },
    #[error("operation requires dimension n+2 = {expected}, algebra has {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("duplicate bracket for indices {0:?}")]
    DuplicateBracket(Vec<usize>),
    #[error("invalid parameters: {0}")]
    Param(String),
    #[error("case not realizable: {0}")]
    CaseNotRealizable(String),
    #[error("not an n-Lie algebra: {0} Jacobi violations (first at X={1:?}, Y={2:?})")]
    NotNLie(usize, Vec<usize>, Vec<usize>),
}

pub type Result<T> = std::result::Result<T, Error>;
