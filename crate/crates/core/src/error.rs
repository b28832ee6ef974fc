use thiserror::Error;

/// Errors produced by field, polynomial, matrix and canonical-form operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedField,
    #[error("invalid modulus {0}: must be a prime below 2^32")]
    InvalidModulus(u64),
    #[error("cannot parse scalar {0:?}")]
    InvalidScalar(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("lcm requires non-zero arguments")]
    ZeroArgument,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("input vectors are linearly dependent")]
    DependentInput,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("block {0} is not square")]
    NonSquareBlock(usize),
    #[error("matrix of size {0} exceeds the cofactor oracle bound")]
    TooLarge(usize),
    #[error("vector is zero")]
    ZeroVector,
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("internal invariant broken: {0}")]
    InternalInvariant(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
