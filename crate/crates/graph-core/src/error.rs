use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("unsupported vertex count {0} (must be 1..=32)")]
    TooManyVertices(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
