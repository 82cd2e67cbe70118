use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::MAX_N)]
    UnsupportedDimension(usize),

    #[error("index {index} is out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("domain point {0} appears more than once")]
    DuplicateDomain(usize),

    #[error("range point {0} appears more than once")]
    DuplicateRange(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("cardinality mismatch: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("not a rook matrix: {0}")]
    NotARookMatrix(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("n = {n} exceeds the bound {max} for this operation")]
    BoundExceeded { n: usize, max: usize },

    #[error("element is not in B_n: {0}")]
    NotInBn(String),

    #[error("invalid ballot sequence: {0}")]
    InvalidBallot(String),

    #[error("basis is not down-closed: {0}")]
    NotDownClosed(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("invalid standard word: {0}")]
    InvalidStandardWord(String),

    #[error("decomposition check failed: {0}")]
    Decomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
