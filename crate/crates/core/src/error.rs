use thiserror::Error;

use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("antipode is singular or missing; braiding inverse unavailable")]
    SingularAntipode,

    #[error("bialgebra has no antipode")]
    NotHopf,

    #[error("structures are defined over different algebras")]
    AlgebraMismatch,

    #[error("base algebra is not tagged as H ⊗ H*")]
    BaseNotTensorSquare,

    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),

    #[error("line {line}: parse error: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: index out of range: {msg}")]
    Range { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dims(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}
