use thiserror::Error;

use crate::vertex_set::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed tree file. `line` is 1-based when the problem can be pinned to one line.
    #[error("{}", match .line {
        Some(line) => format!("parse error at line {line}: {message}"),
        None => format!("parse error: {message}"),
    })]
    Parse {
        line: Option<usize>,
        message: String,
    },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("vertex {0} does not belong to the tree")]
    UnknownVertex(VertexId),

    #[error("path length t={t} is out of range 2..={n}")]
    TOutOfRange { t: usize, n: usize },

    /// An exhaustive enumeration would exceed its size bound. Nothing is truncated.
    #[error("{what}: size {actual} exceeds the enumeration bound {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("{0} is not a facet of the complex")]
    NotAFacet(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: Some(line),
            message: message.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::Guard {
            what,
            limit,
            actual,
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}
