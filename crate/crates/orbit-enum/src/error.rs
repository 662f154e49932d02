use thiserror::Error;

#[derive(Debug, Error)]
pub enum OrbitError {
    #[error("orbit exceeded the budget of {limit} graphs ({partial} found so far)")]
    Budget { limit: usize, partial: usize },
    #[error("unsupported n = {0}")]
    UnsupportedN(usize),
    #[error("missing orbit count for n = {0}")]
    MissingCount(usize),
    #[error("census line {line}: {msg}")]
    Census { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
