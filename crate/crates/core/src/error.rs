use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("line {line}, column {column}: {message}")]
    Located {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("missing assignment for indeterminate(s): {}", .0.join(", "))]
    MissingIndeterminates(Vec<String>),

    #[error("index sets are not a split: {0}")]
    InvalidSplit(String),

    #[error("index set is not contained in the universe")]
    NotSubset,

    #[error("signed index {value} out of range for n = {n}")]
    SignedIndexOutOfRange { value: i64, n: usize },

    #[error("index ({row}, {col}) out of range for size {size}")]
    IndexOutOfRange { row: usize, col: usize, size: usize },

    #[error("matrix of odd size {0} has no Pfaffian")]
    OddSize(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not alternating at ({row}, {col})")]
    NotAlternating { row: usize, col: usize },

    #[error("matrix is not in the orthogonal Lie algebra of S")]
    NotInLieAlgebra,

    #[error("matrix is singular")]
    Singular,

    #[error("index set of odd size {0}")]
    OddIndexSet(usize),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
