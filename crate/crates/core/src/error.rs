use thiserror::Error;

use crate::engine::SearchStats;
use crate::graph::Edge;

/// Failures from graph construction, graph6 parsing and the exact graph primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("edge {0} is not present")]
    EdgeMissing(Edge),
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: {0}")]
    Graph6(String),
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid clique vector: {0}")]
    Spec(String),
    #[error("invalid coloring: {0}")]
    Coloring(String),
    /// The configured node limit was reached before the search closed.
    #[error("search indeterminate after {} nodes (node limit reached)", .0.nodes)]
    Indeterminate(SearchStats),
    #[error("input must not be a complete graph")]
    CompleteGraph,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no known Ramsey number for {0}")]
    UnknownRamsey(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
