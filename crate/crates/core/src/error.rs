use thiserror::Error;

/// Errors raised by graph construction, parsing and analysis.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("endpoint {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {n} vertices, above the solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("eigenvalue iteration did not converge for index {index}")]
    NoConvergence { index: usize },
    #[error("graph contains the triangle {0:?}")]
    HasTriangle([usize; 3]),
    #[error("graph is not regular (degrees {min}..={max})")]
    NotRegular { min: usize, max: usize },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("arithmetic overflow in exact computation")]
    Overflow,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
