use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar {text:?} over {field}")]
    ParseScalar { text: String, field: Field },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("associative algebra axioms fail: {0}")]
    NotAssociative(String),

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("algebra is not commutative")]
    NotCommutative,

    #[error("not a 2-cocycle")]
    NotCocycle,

    #[error("elements are not almost commuting")]
    NotAlmostCommuting,

    #[error("bilinear form is {0}")]
    BadForm(&'static str),

    #[error("zero element not allowed here")]
    ZeroElement,

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
