use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanoError {
    #[error("polygon needs at least three non-collinear vertices, got {0}")]
    Degenerate(usize),
    #[error("vertex list is not in strictly convex position")]
    NotConvex,
    #[error("the origin is not in the strict interior, so the dual is unbounded")]
    UnboundedDual,
    #[error("vector {0} is not primitive")]
    NotPrimitive(String),
    #[error("invalid mutation data: {0}")]
    InvalidMutation(String),
    #[error("no factor exists for this mutation data")]
    NoFactor,
    #[error("remainder choice is not admissible at height {0}")]
    InadmissibleRemainder(i64),
    #[error("expected a polygon with {expected} vertices, got {got}")]
    VertexCount { expected: usize, got: usize },
    #[error("adjacent vertices sum to zero at index {0}")]
    DegenerateSum(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, FanoError>;
