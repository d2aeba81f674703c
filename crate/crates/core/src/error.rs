use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ground set size {0} is outside the supported range 1..=5")]
    GroundSize(usize),

    #[error("unknown element label {label:?} for a ground set of {n} elements")]
    UnknownLabel { label: char, n: usize },

    #[error("mask {mask} does not fit a ground set of {n} elements")]
    MaskOutOfRange { mask: u64, n: usize },

    #[error("family {0} is not a convex geometry")]
    NotConvexGeometry(u32),

    #[error("family {0} is not a closure system (missing the full set or not intersection-closed)")]
    NotClosureSystem(u32),

    #[error("subset {0} is not closed")]
    NotClosed(String),

    #[error("implication {0} does not hold")]
    ImplicationDoesNotHold(String),

    #[error("invalid circle: {0}")]
    InvalidCircle(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("disk {inner} is contained in disk {outer}")]
    ContainedDisks { inner: usize, outer: usize },

    #[error("decision is within the tolerance band: {0}")]
    Marginal(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ground set mismatch: expected {expected} elements, got {got}")]
    GroundMismatch { expected: usize, got: usize },

    #[error("malformed query: {0}")]
    Query(String),

    #[error("unknown geometry id {0:?}")]
    UnknownId(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
