use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while building complexes, adjacency matrices or reports.
#[derive(Debug, Error)]
pub enum SxError {
    #[error("adjacency matrix is empty")]
    EmptyMatrix,

    #[error("adjacency matrix is not square: row {row} has {found} entries, expected {expected}")]
    NonSquare { row: usize, found: usize, expected: usize },

    #[error("duplicate vertex label {label:?} at position {position}")]
    DuplicateLabel { label: String, position: usize },

    #[error("malformed matrix CSV at line {line}, column {column}: {message}")]
    Csv {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("edge ({0}, {1}) references an undeclared vertex")]
    UnknownVertex(usize, usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("simplex {0} is not stored in the complex")]
    SimplexNotFound(String),

    #[error("lower adjacency is undefined for 0-simplices")]
    LowerAdjacencyAtVertexLevel,

    #[error("the complex has no {0}-simplices")]
    NoSimplices(usize),

    #[error("simplices live at different levels ({0} and {1})")]
    LevelMismatch(usize, usize),

    #[error("vertex map is not a bijection on the vertex set: {0}")]
    NotABijection(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("report (de)serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl SxError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        SxError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = SxError> = std::result::Result<T, E>;
