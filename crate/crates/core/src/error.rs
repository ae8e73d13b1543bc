use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("invalid Coxeter type `{0}`")]
    InvalidType(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("lambda = -1 has no inverse image")]
    NonInvertibleLambda,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("d = {0} is not invertible in the scalar ring")]
    DNotInvertible(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
