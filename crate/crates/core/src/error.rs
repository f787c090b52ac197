use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The instance lacks the structure a specialised solver needs.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// An exponential-time path was refused because a size guard tripped.
    #[error("refused: {what} is {measured}, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        measured: usize,
        limit: usize,
    },

    #[error("no applicable solver within limits\n{report}")]
    NoSolver { report: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cross-validation failure: {0}")]
    Disagreement(String),
}
