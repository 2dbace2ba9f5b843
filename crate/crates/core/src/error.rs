use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Kupisch series failed validation. `index` is the first offending vertex.
    #[error("invalid Kupisch series at index {index}: {reason}")]
    InvalidSeries { index: usize, reason: String },

    #[error("invalid module {module}: {reason}")]
    InvalidModule { module: String, reason: String },

    /// A closed-form identity was asked for outside the range where it holds.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("syzygy degree {degree} is out of range: the resolution ends at degree {pd}")]
    OutOfRange { degree: usize, pd: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
