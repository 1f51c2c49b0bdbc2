use thiserror::Error;

/// Errors raised by the library.
///
/// Validation failures (bad arguments, capacity limits) are separated from
/// internal-consistency failures so the CLI can map them to distinct exit codes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("capacity error: n = {n} exceeds the symbolic cap {cap}; raise the cap explicitly (memory grows like 2^(2n-2) polynomial states)")]
    Capacity { n: u32, cap: u32 },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Shape(_) | Error::Capacity { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
