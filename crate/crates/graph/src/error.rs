use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    Empty,

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex set is not convex: {x} lies on a geodesic between {a} and {b}")]
    NotConvex { a: usize, b: usize, x: usize },

    #[error("graph is not a partial cube: {0}")]
    NotPartialCube(String),

    #[error("not a simple cycle: {0}")]
    NotACycle(String),

    #[error("graph has {vertices} vertices, above the exhaustive cap of {cap}; pass force to run anyway")]
    TooLarge { vertices: usize, cap: usize },

    #[error("partial-cube characterizations disagree: {0}")]
    CharacterizationMismatch(String),

    #[error("embedding mismatch at ({u}, {v}): hamming {hamming}, distance {distance}")]
    EmbeddingMismatch {
        u: usize,
        v: usize,
        hamming: usize,
        distance: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("json: {0}")]
    Json(String),
}
