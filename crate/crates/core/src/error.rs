use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("set is not independent")]
    NotIndependent,

    #[error("no independent set of size {0}")]
    NoIndependentSet(usize),

    #[error("{what} limited to {max} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("{0}")]
    Domain(String),

    #[error("tuple {0} lies outside the region")]
    OutsideRegion(String),

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    #[error("witness for (n={n}, d={d}, p={p}, r={r}) computed as {computed}: {graph6}")]
    WitnessMismatch {
        n: usize,
        d: usize,
        p: usize,
        r: usize,
        computed: String,
        graph6: String,
    },

    #[error("graph has {found} vertices, expected {expected}")]
    VertexCount { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
