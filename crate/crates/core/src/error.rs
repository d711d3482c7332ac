use thiserror::Error;

/// Errors raised by graph construction, parsing and the size-capped searches.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency rows are not a simple undirected graph: {0}")]
    InvalidAdjacency(String),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("{what} is capped at {max} vertices, got {n}")]
    SizeCap { what: &'static str, n: usize, max: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown builtin class `{0}`")]
    UnknownBuiltin(String),
    #[error("malformed class spec `{0}`")]
    ClassSpec(String),
    #[error("no closed-form count for family `{0}`")]
    NoFormula(String),
    #[error("forbidden set is empty: the class of all graphs has no index")]
    EmptyForbiddenSet,
    #[error("count is zero, entropy undefined")]
    ZeroCount,
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
