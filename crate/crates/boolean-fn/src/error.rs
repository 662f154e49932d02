use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoolError {
    #[error("unsupported number of variables {0} (must be 1..={max})", max = crate::MAX_VARS)]
    Vars(usize),
    #[error("expected {expected} table entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("value {value} out of range for modulus {m}")]
    Value { value: u32, m: u32 },
    #[error("modulus {0} must be even and at least 2")]
    Modulus(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("function has degree {0}, expected at most 2")]
    NotQuadratic(usize),
    #[error("invalid masks: {0}")]
    Mask(String),
    #[error("functions have {0} and {1} variables")]
    Mismatch(usize, usize),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
