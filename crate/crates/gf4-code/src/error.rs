use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("code length {0} out of range (1..=32)")]
    Length(usize),
    #[error("bad generator matrix shape: {0}")]
    Shape(String),
    #[error("generators {0} and {1} are not orthogonal under the trace inner product")]
    NotSelfDual(usize, usize),
    #[error("generators are linearly dependent over GF(2)")]
    Dependent,
    #[error("no graph form: X block cannot be completed to full rank")]
    NoGraphForm,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no tabulated value for n = {0}")]
    OutOfTable(usize),
    #[error("type II codes have even length, got n = {0}")]
    OddTypeII(usize),
}
