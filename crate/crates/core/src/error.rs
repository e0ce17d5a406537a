use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("{0} is not a prime power in the supported range")]
    NotPrimePower(u32),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("validation of {name} failed: {reason}")]
    Validation { name: String, reason: String },

    #[error("asset file {} not found", .0.display())]
    AssetMissing(PathBuf),

    #[error("unknown named graph `{0}`")]
    UnknownGraph(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
