use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0} is not an odd prime")]
    NotPrime(u32),
    #[error("unsupported order {0}: need a prime or prime square, 1 mod 4, at most 32")]
    UnsupportedOrder(u32),
    #[error("bad circulant row: {0}")]
    BadRow(String),
    #[error("no valid coset union for p = {0}")]
    NoValidH(u32),
    #[error("inconsistent nested spec: {0}")]
    BadSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}
