//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator count mismatch: {0} vs {1}")]
    GeneratorMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("mixed-parity input where a homogeneous matrix is required")]
    MixedParity,
    #[error("not a root of this root system")]
    NotARoot,
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("not a positive system: {0}")]
    NotPositiveSystem(String),
    #[error("weight is not dominant integral for the compact positive roots")]
    NotDominant,
    #[error("not a member: {0}")]
    NotMember(String),
    #[error("outside chart: {0}")]
    OutsideChart(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("unknown basis label {0}")]
    UnknownLabel(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
