use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error("expected {expected} factors, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix {0} is singular")]
    Singular(String),
    #[error("matrix {0} is not unitary")]
    NotUnitary(String),
    #[error("{0}^{1} words is too many")]
    TooLarge(usize, usize),
    #[error("invalid arguments: {0}")]
    Invalid(String),
    #[error("construction arity mismatch: {0}")]
    Arity(String),
    #[error(transparent)]
    Bool(#[from] boolean_fn::BoolError),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
