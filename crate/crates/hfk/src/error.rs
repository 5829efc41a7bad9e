//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("malformed braid word: {0}")]
    MalformedWord(String),
    #[error("closure has {components} components; not a knot")]
    NotAKnot { components: usize },
    #[error("inapplicable Markov move: {0}")]
    InapplicableMove(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero")]
    DivideByZero,
    #[error("degree cap {cap} exceeded during basis computation")]
    DegreeCapExceeded { cap: usize },
    #[error("quotient is infinite-dimensional; a grade cap is required")]
    InfiniteDimensional,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubeError {
    #[error("subset enumeration over {count} vertices exceeds cap {cap}")]
    SubsetCapExceeded { count: usize, cap: usize },
    #[error("differential does not square to zero at {context}")]
    DifferentialNotSquareZero { context: String },
    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
