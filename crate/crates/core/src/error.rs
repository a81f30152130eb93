//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("field mismatch in {0}")]
    FieldMismatch(&'static str),

    #[error("tensor product requires matching middle algebras")]
    MiddleAlgebraMismatch,

    #[error("modules have different parent algebroids")]
    ParentMismatch,

    #[error("{0} is not invertible")]
    NotInvertible(&'static str),

    #[error("action does not descend to the quotient in {0}")]
    ActionNotDescending(&'static str),

    #[error("antipode identity violated while building {0}")]
    InvalidHopfData(&'static str),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("cannot parse scalar {text:?} over {field}")]
    ScalarParse { text: String, field: String },

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("unresolved reference {0:?} in descriptor")]
    UnknownReference(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
