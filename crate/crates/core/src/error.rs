use crate::grid::VertexCoord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty input: a grid graph needs at least one vertex")]
    EmptyInput,

    #[error("{0} is not a vertex of the graph")]
    NotAVertex(VertexCoord),

    #[error("{0} is not a vertex of the graph, so the set is not a subset")]
    NotASubset(VertexCoord),

    #[error("index {index} out of range 0..={max} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: u32,
        max: u32,
    },

    #[error("grid graph is not connected")]
    NotConnected,

    #[error("scan cursor exhausted while {0}")]
    CursorExhausted(&'static str),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("bad arguments: {0}")]
    BadArgs(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
