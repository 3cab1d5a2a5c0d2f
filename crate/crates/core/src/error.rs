use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate Moebius map (ad - bc = 0)")]
    DegenerateMap,
    #[error("points are not pairwise distinct")]
    RepeatedPoints,
    #[error("expected {expected} points, got {got}")]
    Cardinality { expected: usize, got: usize },
    #[error("parameter outside Omega: {0}")]
    OmegaViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
