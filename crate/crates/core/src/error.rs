use macdonald_coeff::CoeffError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("input is not invariant under the Weyl group")]
    NotSymmetric,
    #[error("{0} exceeds the configured resource guard; use probabilistic mode or raise the guard")]
    ResourceGuard(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, MacError>;
