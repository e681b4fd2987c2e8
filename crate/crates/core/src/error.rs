use thiserror::Error;

/// Errors raised by graph parsing, ideal arithmetic and the detection routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: loop edge on vertex {vertex}")]
    LoopEdge { line: usize, vertex: String },

    #[error("vertex {vertex} outside the range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices requested, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("exponent {value} does not fit the exponent type")]
    ExponentOverflow { value: u64 },

    #[error("operation undefined for the {0} ideal")]
    DegenerateIdeal(&'static str),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("generator {generator} does not divide the bounding monomial")]
    DualBound { generator: String },

    #[error("graph has no edges")]
    Edgeless,

    #[error("vector is not a {order}-cover of the graph")]
    NotACover { order: u64 },

    #[error("2-cover is reducible")]
    Reducible,

    #[error("threshold must exceed 1, got {0}")]
    InvalidThreshold(usize),

    #[error("need at least {needed} vertices, graph has {found}")]
    TooFewVertices { needed: usize, found: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
