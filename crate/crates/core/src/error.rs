use thiserror::Error;

/// Errors raised by the combinatorial and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition {0:?}: parts must be positive and the weight nonzero")]
    InvalidComposition(Vec<usize>),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid descent set: element {element} is outside 1..{n}")]
    InvalidDescentSet { element: usize, n: usize },

    #[error("composition with {parts} parts cannot be padded to length {len}")]
    LengthOverflow { parts: usize, len: usize },

    #[error("not a permutation of 1..{n}: {word:?}")]
    NotAPermutation { word: Vec<usize>, n: usize },

    #[error("ambient dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("exponent vector of length {got} in a polynomial over {expected} variables")]
    MonomialLength { expected: usize, got: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("{vars} variables are too few to separate fundamentals of degree {degree}")]
    InsufficientVariables { vars: usize, degree: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is not quasisymmetric: {0}")]
    NotQuasisymmetric(String),

    #[error("index {index:?} is not valid for basis {basis}")]
    InvalidIndex { index: Vec<usize>, basis: String },

    #[error("index {index:?} has weight {got}, expansion has degree {degree}")]
    WeightMismatch { index: Vec<usize>, got: usize, degree: usize },

    #[error("expected an expansion in basis {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("sequence {0:?} is not in the constrained family")]
    NotConstrained(Vec<usize>),

    #[error("inversion-free row ordering: {0}")]
    ConventionInconsistency(String),

    #[error("size {n} exceeds the configured bound {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
