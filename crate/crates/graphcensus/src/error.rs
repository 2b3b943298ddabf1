use thiserror::Error;

/// Errors produced by the enumeration, generating-function and transform code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid tag pattern `{input}`: {reason}")]
    Pattern { input: String, reason: String },

    #[error("candidate budget of {budget} exceeded while enumerating cell E={edges}, V={vertices}")]
    BudgetExceeded {
        budget: u64,
        edges: usize,
        vertices: usize,
    },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("incompatible tables: {0}")]
    Incompatible(String),

    #[error("missing cell E={edges}, V={vertices} in table `{table}`")]
    MissingCell {
        table: String,
        edges: usize,
        vertices: usize,
    },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("series expansion failed: {0}")]
    Series(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            line,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
