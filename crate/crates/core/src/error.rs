use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// `n * d` is odd, so `2|E| = d|V|` has no solution.
    #[error("no {d}-regular graph on {n} vertices: n*d must be even (2|E| = d|V|)")]
    ParityViolation { n: usize, d: usize },

    #[error("degree {d} must satisfy 1 <= d < n = {n}")]
    DegreeTooLarge { n: usize, d: usize },

    #[error("invalid adjacency matrix: {0}")]
    InvalidAdjacency(String),

    #[error("symmetric eigensolver did not converge (matrix order {0})")]
    ConvergenceFailure(usize),

    #[error("cycle length {0} is not supported (expected 3..=6)")]
    UnsupportedLength(usize),

    #[error("logarithm base sqrt(d-1) is degenerate for d = {0}")]
    DegenerateBase(usize),

    #[error("cooling rates must lie in (0, 1) with min <= max, got [{min}, {max}]")]
    InvalidCooling { min: f64, max: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
