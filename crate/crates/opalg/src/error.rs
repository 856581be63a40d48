//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("degree violation: {0}")]
    DegreeViolation(String),

    #[error("differential does not square to zero: first nonzero entry of d∘d is ({row} <- {col}) = {value}")]
    NotSquareZero {
        row: String,
        col: String,
        value: String,
    },

    #[error("graft slot {slot} out of range 1..={max}")]
    SlotOutOfRange { slot: usize, max: usize },

    #[error("arity {0} is below the minimum arity 2")]
    ArityTooSmall(usize),

    #[error("unshuffle block size {i} out of range 1..={max} for n = {n}")]
    BadUnshuffleBlock { i: usize, n: usize, max: usize },

    #[error("requested arity {arity} exceeds the {what} cap of {cap}")]
    CapExceeded {
        arity: usize,
        cap: usize,
        what: String,
    },

    #[error("tree decoration references an unknown generator of arity {0}")]
    UnknownGenerator(usize),

    #[error("algebra provides no operation of arity {0}")]
    MissingOperation(usize),

    #[error("invalid contraction: {0}")]
    InvalidContraction(String),

    #[error("source algebra fails its axiom at arity {0}; transfer refused")]
    SourceAxiomFailure(usize),

    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),

    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
