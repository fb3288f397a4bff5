//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("degree {degree} exceeds cap {cap}")]
    DegreeExceedsCap { degree: i64, cap: usize },

    #[error("degree cap must be at least {needed}, got {got}")]
    CapTooSmall { needed: usize, got: usize },

    #[error("field is not homogeneous of degree 2")]
    NotHomogeneousQuadratic,

    #[error("field is already conformal, nothing to reduce")]
    AlreadyConformal,

    #[error("seed lies in the subalgebra")]
    SeedConformal,

    #[error("linear field lies in the conformal linear part")]
    LinearFieldConformal,

    #[error("span does not contain the degree-1 stratum")]
    MissingLinearStratum,

    #[error("span does not contain the degree-2 filtration")]
    MissingQuadraticBase,

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("seed outside ambient subalgebra")]
    SeedOutsideAmbient,

    #[error("{0}")]
    Parse(#[from] crate::dsl::ParseError),

    /// An invariant the construction guarantees was observed to fail.
    /// Reaching this variant always indicates a bug, never bad input.
    #[error("internal invariant breach: {0}")]
    Internal(String),
}
