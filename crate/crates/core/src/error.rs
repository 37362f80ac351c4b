use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("graph needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("capacity entry {index} must be positive")]
    NonPositiveCapacity { index: usize },

    #[error("{what}: {requested} exceeds the configured cap of {limit}")]
    SizeCap {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("description does not bound coordinate {0}")]
    Unbounded(usize),

    #[error("outside predicate domain: {0}")]
    OutsideDomain(String),
}
