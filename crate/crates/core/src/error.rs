use thiserror::Error;

/// Errors raised by the exact computations.
///
/// Most variants signal that a proven identity failed to hold, which can only
/// happen through a bug; they are reported rather than panicking so the CLI
/// can exit with a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("non-exact division: {num} / {den}")]
    NonExactDivision { num: String, den: String },

    #[error("negative or non-integral coefficient in {what}")]
    NegativeCoefficient { what: String },

    #[error("quotient is not a Taylor series: coefficient of q^{exponent} is nonzero")]
    NotTaylor { exponent: i64 },

    #[error("support violation in {what}")]
    SupportViolation { what: String },

    #[error("pole mismatch at node {node}: {detail}")]
    PoleMismatch { node: usize, detail: String },

    #[error("maximal chain stuck after {steps} steps: {detail}")]
    ChainStuck { steps: usize, detail: String },

    #[error("minimal polynomial has a non-rational root (remaining factor of degree {degree})")]
    IrrationalPole { degree: usize },

    #[error("eigenvalue numerator and denominator have different degrees ({num} vs {den})")]
    NotSameDegree { num: usize, den: usize },

    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("integer overflow in {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
