use thiserror::Error;

/// Errors produced by the library.
///
/// Variants fall in three groups: invalid input, a configured cap being
/// exceeded, and internal inconsistencies (failed cross-checks, which always
/// indicate a bug rather than bad input). [`Error::kind`] reports the group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    EmptyTree,
    #[error("wrong edge count: a tree on {n} vertices has {expected} edges, got {got}")]
    WrongEdgeCount { n: usize, expected: usize, got: usize },
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edges do not connect the vertex set: vertex {unreached} is unreachable from vertex 1")]
    Disconnected { unreached: usize },
    #[error("Prüfer codec needs at least 2 vertices, got {0}")]
    PruferTooSmall(usize),
    #[error("Prüfer sequence for n = {n} must have length {expected}, got {got}")]
    PruferLength { n: usize, expected: usize, got: usize },
    #[error("Prüfer entry {entry} at position {position} out of range 1..={n}")]
    PruferEntryOutOfRange { entry: usize, position: usize, n: usize },
    #[error("root {root} out of range 1..={n}")]
    RootOutOfRange { root: usize, n: usize },
    #[error("random trees need n >= 2, got {0}")]
    SampleTooSmall(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what}: n = {n} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("series precondition violated: {0}")]
    SeriesPrecondition(&'static str),
    #[error("fixed-point iteration for {system} did not converge within {iterations} iterations")]
    NonConvergence { system: &'static str, iterations: usize },
    #[error("closed form for {what} at n = {n} is not an integer")]
    NonIntegral { what: &'static str, n: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

/// Coarse classification of an [`Error`], used by front ends to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    CapExceeded,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::CapExceeded { .. } => ErrorKind::CapExceeded,
            Error::NonConvergence { .. } | Error::NonIntegral { .. } | Error::Inconsistency(_) => ErrorKind::Internal,
            _ => ErrorKind::InvalidInput,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
