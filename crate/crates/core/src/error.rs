use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("exact solver limit exceeded: instance has {n} vertices, limit is {limit}")]
    SolverLimitExceeded { n: usize, limit: usize },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("{0} is not a DFS preordering of the tree")]
    NotDfsPreorder(String),
    #[error("not a vertex cover: edge {{{0}, {1}}} is uncovered")]
    NotACover(usize, usize),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
