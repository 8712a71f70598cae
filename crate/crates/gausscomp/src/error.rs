use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric or structural precondition on an input was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Shapes of two operands do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A requested statistic does not apply to the ensemble's shape.
    #[error("statistic not applicable: {0}")]
    StatisticMismatch(String),

    /// Parameters fall outside the range a model is defined for.
    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serialization(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
