//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },

    #[error("box exponent too small: multidegree exceeds kappa at variable {var}")]
    KappaTooSmall { var: usize },

    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("form {index} is not positive definite")]
    NotPositiveDefinite { index: usize },

    #[error("base vector has non-positive value under the form")]
    NonPositiveBase,

    #[error("negative component at position {index}")]
    NegativeComponent { index: usize },

    #[error("degree mismatch across inputs: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("arity mismatch: polynomial has {vars} variables but {slots} slots supplied")]
    ArityMismatch { vars: usize, slots: usize },

    #[error("auxiliary degree {degree} exceeds the number of polarization variables {k}")]
    PolarizationDegree { degree: usize, k: usize },

    #[error("divided difference division left a non-zero remainder")]
    InexactDivision,

    #[error("partition parts must be weakly decreasing and non-negative")]
    InvalidPartition,

    #[error("images do not form a permutation of 1..=n")]
    InvalidPermutation,

    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
