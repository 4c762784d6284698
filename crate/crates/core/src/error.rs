use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("graph is not {0}")]
    ClassViolation(&'static str),

    #[error("instance has {size} vertices, above the exact-solver limit of {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
