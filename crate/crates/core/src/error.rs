use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a term with negative exponent {0}; cannot embed into a power series")]
    NegativeExponent(i64),
    #[error("constant term {0} is not a unit (+1 or -1)")]
    NonUnitConstantTerm(String),
    #[error("pochhammer length {0} is negative")]
    NegativeLength(i64),
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("partition is not of Type-1: {0}")]
    NotType1(String),
    #[error("invalid staircase image: {0}")]
    InvalidImage(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
