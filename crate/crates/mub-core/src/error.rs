//! Crate-wide error type.

use thiserror::Error;

/// Errors for matrix, field, and MUB operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimError { left: usize, right: usize },

    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (deviation {deviation:.3e}, tolerance {tol:.3e})")]
    NotUnitary { deviation: f64, tol: f64 },

    #[error("subspace basis is not orthonormal (Gram deviation {deviation:.3e})")]
    InvalidSubspace { deviation: f64 },

    #[error("family members {i} and {j} do not commute (commutator norm {norm:.3e})")]
    NotCommuting { i: usize, j: usize, norm: f64 },

    #[error("family member {index} is not normal (deviation {deviation:.3e})")]
    NotNormal { index: usize, deviation: f64 },

    #[error("failed to separate joint eigenspaces after {attempts} seeded attempts")]
    DegenerateFamily { attempts: usize },

    #[error("operator basis has {got} elements, a full basis of M_d needs {want}")]
    NotFullOnb { got: usize, want: usize },

    #[error("malformed linear map: {reason}")]
    InvalidMap { reason: String },

    #[error("subalgebra certificate hypothesis failed: {reason} (residual {residual:.3e})")]
    HypothesisFailed { reason: String, residual: f64 },

    #[error("not a valid MASA: {reason}")]
    InvalidMasa { reason: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial is not irreducible over GF({p})")]
    ReducibleModulus { p: u64 },

    #[error("division by zero in a finite field")]
    ZeroInverse,

    #[error("elements belong to different field specs")]
    FieldMismatch,

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("expected {want} bases, got {got}")]
    WrongCount { got: usize, want: usize },

    #[error("bases {i} and {j} are not mutually unbiased (deviation {deviation:.3e})")]
    NotMub { i: usize, j: usize, deviation: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("parse error at {path}: {reason}")]
    ParseError { path: String, reason: String },

    #[error("invalid document at {path}: {reason}")]
    ValidationError { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
