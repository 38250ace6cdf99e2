use thiserror::Error;

/// Errors surfaced by the fallible entry points of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 1")]
    InvalidRank(usize),

    #[error("generator index ({k},{l}) out of range for rank {m}")]
    IndexOutOfRange { k: u16, l: u16, m: usize },

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid word parameter {0}: must be at least 1")]
    InvalidWordLength(usize),

    #[error("weight vector has {got} entries, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("monomial {0} contains a generator outside the B block")]
    NonBGenerator(String),

    #[error("monomial {0} has nonzero weight")]
    NonZeroWeight(String),

    #[error("decode error at {path}: {message}")]
    Decode { path: String, message: String },
}
