use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid permutation {0:?}: images must be a bijection of 1..=n")]
    InvalidPermutation(Vec<usize>),

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("letter {letter} is outside the {alphabet} alphabet")]
    LetterOutsideAlphabet { letter: i32, alphabet: &'static str },

    #[error("pair violates the {variant} tableau conditions: {reason}")]
    InvalidPair { variant: &'static str, reason: String },

    #[error("parameters are not a probability vector: {0}")]
    Unnormalized(String),

    #[error("enumeration of {words} words exceeds the limit of {limit}")]
    InfeasibleEnumeration { words: u128, limit: u128 },

    #[error("series order {order} exceeds the guard {limit}")]
    GuardExceeded { order: usize, limit: usize },

    #[error("operation not supported for {0}")]
    UnsupportedSpec(String),

    #[error("series has constant term {0}, which this operation does not allow")]
    ConstantTerm(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
