use thiserror::Error;

/// Errors raised while building or evaluating interpolants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InterpError {
    #[error("invalid interval: need a < b and n >= 1 (got a = {a}, b = {b}, n = {n})")]
    InvalidInterval { a: f64, b: f64, n: usize },

    #[error("nodes must be finite and strictly increasing (violated at index {index})")]
    NodesNotIncreasing { index: usize },

    #[error("need at least two nodes, got {0}")]
    TooFewNodes(usize),

    #[error("sample count {samples} does not match node count {nodes}")]
    LengthMismatch { nodes: usize, samples: usize },

    #[error("sample {index} is not finite")]
    NonFiniteSample { index: usize },

    #[error("d must satisfy 0 ≤ d ≤ n (got d = {d}, n = {n})")]
    DegreeOutOfRange { d: usize, n: usize },

    #[error("e must satisfy 0 ≤ e ≤ d (got e = {e}, d = {d})")]
    EndCountOutOfRange { e: usize, d: usize },

    #[error("weights for d = {d} over {nodes} nodes leave the floating-point range")]
    WeightRange { d: usize, nodes: usize },

    #[error("evaluation point {0} is not finite")]
    NonFiniteInput(f64),

    #[error("end corrections are singular at the interval endpoint {0}")]
    EvaluationAtEndpoint(f64),

    #[error("blend form is singular at node {index} (x = {x})")]
    SingularAtNode { index: usize, x: f64 },

    #[error("node index {index} out of range for {len} nodes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cubic spline needs at least 4 nodes, got {0}")]
    TooFewSplineNodes(usize),

    #[error("malformed record: {0}")]
    Record(String),
}

pub type Result<T> = std::result::Result<T, InterpError>;
