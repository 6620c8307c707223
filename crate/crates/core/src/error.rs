use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("k must be at least 3 (got {0})")]
    InvalidK(usize),

    #[error("graph is not a {expected}-plex: {detail}")]
    NotAPlex { expected: u32, detail: String },

    #[error("oracle budget of {budget} candidate checks exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("time limit of {0:.3}s exceeded")]
    TimeLimit(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
