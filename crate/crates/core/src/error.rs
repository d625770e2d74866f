use thiserror::Error;

/// Errors raised by the geometry, combinatorics and invariant routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("ambient dimension {0} exceeds the supported maximum of {max}", max = crate::lattice::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("negative coordinate {value} at position {index}")]
    NegativeCoordinate { index: usize, value: String },

    #[error("polytope is not full-dimensional (dim {dim} in ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("affine hull contains no lattice points")]
    NoLatticePoint,

    #[error("diagram is not convenient")]
    NotConvenient,

    #[error("vertices are not integral: {0}")]
    NonIntegral(String),

    #[error("enumeration budget exceeded: {requested} cells requested, cap is {cap}")]
    BudgetExceeded { requested: u128, cap: u128 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("fit verification failed: {0}")]
    FitMismatch(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("invariant {name} is not a non-negative integer: {value}")]
    InvalidInvariant { name: &'static str, value: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
