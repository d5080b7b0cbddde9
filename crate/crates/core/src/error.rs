use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("polygon is not convex")]
    NotConvex,

    #[error("edge index {index} out of range for polygon with {len} edges")]
    BadIndex { index: usize, len: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("empty input")]
    EmptyInput,

    #[error("monotonic clock did not advance during a timed trial")]
    ClockUnavailable,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
