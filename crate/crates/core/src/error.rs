use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {0} is outside the supported graph6 range 0..=62")]
    UnsupportedOrder(usize),

    #[error("invalid edge {{{0}, {1}}}: {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("invalid parameters for family `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("endpoints must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("brute-force oracle limited to {limit} vertices, got {n}")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {gap:e}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("matrix entry [{row}][{col}] is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph on {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
