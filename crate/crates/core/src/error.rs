use thiserror::Error;

/// Errors raised by graph construction, parsing and the checked operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex set {0} is not a cover of the graph")]
    NotACover(String),

    #[error("rejected input: {0}")]
    Rejected(String),

    #[error("input too large: {0}")]
    Oversize(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
