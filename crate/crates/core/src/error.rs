use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: VertexId, n: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("exponent {0} not supported (need an integer >= 2)")]
    BadExponent(i64),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("vertex subset must be non-empty")]
    EmptySubset,
    #[error("{0} is not connected")]
    Disconnected(&'static str),
    #[error("left factor needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("no connected sample after {0} attempts")]
    GenerationFailure(usize),
}
