use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by parsing, monitoring, graph construction and learning.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown channel `{0}`")]
    UnknownChannel(String),

    #[error("invalid interval: lo ({lo}) > hi ({hi})")]
    IntervalBounds { lo: usize, hi: usize },

    #[error("trajectory must contain at least two samples (got {0})")]
    TrajectoryTooShort(usize),

    #[error("sample {index} has {got} values, schema has {expected} channels")]
    SampleWidth {
        index: usize,
        got: usize,
        expected: usize,
    },

    #[error("time index {t} outside trajectory range [0, {max}]")]
    TimeOutOfRange { t: usize, max: usize },

    #[error("invalid robustness bounds: require raw_min < 0 < raw_max and delta > 0 (raw_min={raw_min}, raw_max={raw_max}, delta={delta})")]
    InvalidBounds {
        raw_min: f64,
        raw_max: f64,
        delta: f64,
    },

    #[error("lambda must lie in [0, 1) (got {0})")]
    InvalidLambda(f64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("graph contains a directed cycle")]
    CycleDetected,

    #[error("{0} must be non-empty")]
    EmptyInput(&'static str),

    #[error("affine scale must be positive (got {0})")]
    InvalidScale(f64),

    #[error("invalid world: {0}")]
    InvalidWorld(String),

    #[error("no safe path from start to goal exists")]
    UnsolvableWorld,

    #[error("cannot step from terminal state {0}")]
    TerminalStep(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
