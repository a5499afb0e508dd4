use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {index} out of range for size {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a quasi order: ({0},{1}) and ({1},{2}) hold but ({0},{2}) does not")]
    NotQuasiOrder(usize, usize, usize),

    #[error("not a strict order: {0}")]
    NotStrictOrder(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("not a graph: edge ({0},{1}) has no reverse")]
    NotAGraph(usize, usize),

    #[error("not an extension: {0}")]
    NotExtension(String),

    #[error("pair ({0},{1}) is not a vertex of the associated digraph")]
    BadPair(usize, usize),

    #[error("pair set contains a cycle of length {}", .0.len().saturating_sub(1))]
    CycleInX(Vec<(usize, usize)>),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("search budget of {budget} exhausted in {what}")]
    LimitExceeded { what: &'static str, budget: u64 },

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid branching sequence: {0}")]
    InvalidSigma(String),

    #[error("selector undefined or invalid at {0:?}")]
    InvalidSelector(Vec<usize>),
}
