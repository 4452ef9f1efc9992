use thiserror::Error;

/// Errors produced by sequence validation, tree construction and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence does not generate a tree: {0}")]
    NotGraphicTree(String),

    #[error("sequence too small: need at least 2 entries, got {0}")]
    TooSmall(usize),

    #[error("cannot parse degree sequence: {0}")]
    Parse(String),

    #[error("tree of order 2 has no internal vertex")]
    NoInternalVertex,

    #[error("vertex {0} is a leaf and cannot be a root")]
    RootIsLeaf(usize),

    #[error("sequences have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("enumeration budget exceeded: {count} labeled trees, budget {budget}")]
    BudgetExceeded { count: u128, budget: u128 },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("matrix is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("theorem violated: {0}")]
    TheoremViolated(String),
}
