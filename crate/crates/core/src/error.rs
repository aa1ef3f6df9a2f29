use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..={max}", max = crate::MAX_VERTICES)]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("color {color} outside 1..={k}")]
    InvalidColor { color: u8, k: u8 },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("target undefined: {0}")]
    UndefinedTarget(String),
    #[error("no qualifying component")]
    NoQualifyingComponent,
    #[error("work budget of {budget} expansions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
