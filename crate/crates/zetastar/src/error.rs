use thiserror::Error;

use crate::words::{Composition, Word};

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid composition: every part must be >= 1")]
    InvalidComposition,
    #[error("word `{0}` is not in H1 (must be 1 or end with y)")]
    NotInH1(Word),
    #[error("word `{0}` is not in H0 (must be 1, or start with x and end with y)")]
    NotInH0(Word),
    #[error("the zero polynomial has no weight")]
    UndefinedWeight,
    #[error("index `{0}` is not admissible (first part must be >= 2)")]
    Inadmissible(Composition),
    #[error("divergent evaluation: word `{0}` is outside H0")]
    DivergentEvaluation(Word),
    #[error("insufficient precision: {0}")]
    PrecisionInsufficient(String),
    #[error("invalid j-vector: {0}")]
    InvalidJVector(String),
    #[error("requested weight {requested} exceeds the configured cap {cap}")]
    WeightCapExceeded { requested: u32, cap: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
