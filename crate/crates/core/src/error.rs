use thiserror::Error;

/// Errors raised while building or analysing a presentation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    DanglingArrow { arrow: String, vertex: String },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("paths `{left}` and `{right}` are not composable")]
    NotComposable { left: String, right: String },
    #[error("invalid rational `{0}` (expected `n` or `n/d`)")]
    InvalidScalar(String),
    #[error("not a toupie quiver: {0}")]
    NotToupie(String),
    #[error("quiver contains a cycle")]
    Cycle,
    #[error("relation {index}: {reason}")]
    Relation { index: usize, reason: String },
    #[error("branch `{0}` occurs in both a monomial and a non-monomial relation")]
    BranchConflict(String),
    #[error("non-monomial relations are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
    #[error("bar term {0} is not attached")]
    NotAttached(String),
    #[error("{0} is not a chain")]
    NotAChain(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("zigzag cycle through cell {0}")]
    ZigzagCycle(String),
    #[error("hypotheses not satisfied: {}", .0.join("; "))]
    Hypotheses(Vec<String>),
    #[error("Ext algebra has no quadratic presentation: {0}")]
    NotQuadratic(String),
    #[error("presentations live on different quivers")]
    QuiverMismatch,
    #[error("{what} bound must be at least {min}, got {got}")]
    Bound { what: &'static str, min: usize, got: usize },
    #[error("input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
