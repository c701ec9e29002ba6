use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("vertex {0} has weight 0")]
    ZeroWeight(Vertex),
    #[error("vertex {0} is on both sides of the bipartition")]
    SharedVertex(Vertex),
    #[error("edge {0}-{1} does not cross the bipartition")]
    NonCrossingEdge(Vertex, Vertex),
}

/// Error while reading one of the text formats; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// A lemma or decomposition was invoked outside its preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("size condition violated: {0}")]
    SizeCondition(String),
    #[error("isolated vertex {0} in side B")]
    IsolatedInB(Vertex),
    #[error("isolated vertex {0} in side A")]
    IsolatedInA(Vertex),
    #[error("isolated vertex {0} in the graph")]
    IsolatedVertex(Vertex),
    #[error("weight condition violated: {0}")]
    WeightCondition(String),
    #[error("q must be positive")]
    ZeroQ,
    #[error("empty input: {0}")]
    EmptyInput(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for brute force: {what} is {actual}, limit {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}
