use thiserror::Error;

use crate::cover::AxiomViolation;
use crate::maps::MorphismViolation;
use crate::order::PosetViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partial order: {0}")]
    InvalidPoset(PosetViolation),

    #[error("carrier of size {size} exceeds the size cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("frame has more than {cap} elements")]
    FrameTooLarge { cap: usize },

    #[error("the given subset does not cover the base")]
    NotACover,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("morphisms do not share the required spaces")]
    MismatchedSpaces,

    #[error("covering relation violates the axioms: {0}")]
    InvalidCover(AxiomViolation),

    #[error("not a morphism: {0}")]
    InvalidMorphism(MorphismViolation),

    #[error("search space of {candidates} candidates exceeds the limit of {cap}")]
    SearchTooLarge { candidates: u128, cap: u128 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Semantic(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeCap { .. } | Error::FrameTooLarge { .. } | Error::SearchTooLarge { .. } => 2,
            _ => 1,
        }
    }
}
