use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution {binding} makes the denominator factor {factor} vanish")]
    Pole { binding: String, factor: String },
    #[error("indeterminate sets differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown indeterminate {0:?}")]
    UnknownVar(String),
    #[error("at most {max} indeterminates are supported, got {0}", max = crate::mono::MAX_VARS)]
    TooManyVars(usize),
    #[error("exponent overflow")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}
