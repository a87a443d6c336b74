use thiserror::Error;

/// Runtime failures. Everything here is an *inequality* or I/O condition;
/// size equalities never show up because they are enforced by the type
/// parameters of [`crate::Size`], [`crate::Vector`] and [`crate::Matrix`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative size: {0}")]
    NegativeSize(i64),

    #[error("length mismatch: expected {expected} elements, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("subrange out of range: {0}")]
    SubRange(String),

    #[error("cannot build a matrix from an empty column list")]
    EmptyList,

    #[error("band bounds violated: kl={kl}, ku={ku} must satisfy kl < m={m} and ku < n={n}")]
    BandBound {
        kl: usize,
        ku: usize,
        m: usize,
        n: usize,
    },

    #[error("SVD did not converge within {0} sweeps")]
    NonConvergence(usize),

    #[error("jobu and jobvt cannot both overwrite the input matrix")]
    BothOverwrite,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the CLI: 1 for dynamic dimension/band/SVD
    /// check failures, 2 for parse, I/O and usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) => 2,
            _ => 1,
        }
    }
}
