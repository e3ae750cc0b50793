use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not {modulus}-integral")]
    NotIntegral { modulus: u64 },
    #[error("pole at q = {at}")]
    Pole { at: String },
    #[error("pole of generating function")]
    GeneratingFunctionPole,
    #[error("modulus must be odd (got {0})")]
    EvenModulus(u64),
    #[error("series too slow: |q| = {abs} exceeds ceiling {ceiling}")]
    SeriesTooSlow { abs: f64, ceiling: f64 },
    #[error("denominator not invertible mod {modulus}")]
    DenominatorNotInvertible { modulus: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
