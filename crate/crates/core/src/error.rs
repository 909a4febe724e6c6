use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("subset-dictionary key is not strictly increasing")]
    UnsortedKey,

    #[error("capacity exceeded: requested {requested}, limit {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pattern has {vertices} vertices, analysis is limited to {limit}")]
    PatternTooLarge { vertices: usize, limit: usize },

    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),

    #[error("time limit exceeded")]
    Timeout,

    #[error("memory cap of {0} MiB exceeded")]
    MemoryCap(u64),

    #[error("solver stopped unexpectedly: {0}")]
    Solver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
