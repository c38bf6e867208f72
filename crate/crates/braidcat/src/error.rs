use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("generator order 1 is not allowed (index {0})")]
    UnitOrder(usize),
    #[error("element has {got} coefficients, group has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("operation requires a finite group")]
    InfiniteGroup,
    #[error("operation requires a free group (all generator orders 0)")]
    NotFree,
    #[error("search space of {candidates} candidates exceeds the guard {guard}")]
    SearchSpaceTooLarge { candidates: u128, guard: u128 },
    #[error("form entry ({i},{j}) is not killed by the generator orders")]
    IllDefinedBilinear { i: usize, j: usize },
    #[error("quadratic form data violates a well-definedness congruence: {0}")]
    IllDefinedQuadratic(String),
    #[error("the given bilinear form is not a polarity witness")]
    NotAWitness,
    #[error("coboundary witness table has a nonzero entry at a zero argument")]
    NotNormalized,
    #[error("map values must be 2-torsion")]
    NotTwoTorsion,
    #[error("table is missing an entry for {0}")]
    IncompleteTable(String),
    #[error("cocycle failed validation: {0}")]
    InvalidCocycle(String),
    #[error("c(x,y)+c(y,x) does not agree with its generator matrix at ({x:?},{y:?})")]
    NotBilinear { x: Vec<i64>, y: Vec<i64> },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
