use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator of a rational number must be positive")]
    ZeroRationalDenominator,
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),
    #[error("prefix index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expansions represent different integers ({left} vs {right})")]
    MismatchedValue { left: u64, right: u64 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
