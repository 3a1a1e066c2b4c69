use thiserror::Error;

use crate::poly::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("bracket file line {line}: {message}")]
    BracketFile { line: usize, message: String },

    #[error("arity mismatch: expected {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{op} is not defined for arity {arity}")]
    UnsupportedArity { op: &'static str, arity: usize },

    #[error("Jacobi identity fails at ({a},{b},{c}): residual {residual}")]
    NotPoisson {
        a: usize,
        b: usize,
        c: usize,
        residual: String,
    },

    #[error("{what} is not constant")]
    NotConstant { what: String },

    #[error("input cochain is not {expected}")]
    WrongSymmetry { expected: &'static str },

    #[error("input cochain is not a Hochschild cocycle")]
    NotCocycle,

    /// The Jacobi map of the 3-cocycle does not vanish, so it is not the
    /// coboundary of a symmetric cochain; the triple is one-based and sorted.
    #[error("Jacobi map does not vanish: witness triple ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    JacobiObstruction { witness: (usize, usize, usize) },

    #[error("solver produced a cochain whose coboundary differs from the input")]
    SolverInconsistency,

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
