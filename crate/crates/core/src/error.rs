use thiserror::Error;

#[derive(Debug, Error)]
pub enum MixError {
    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid group specification: {0}")]
    InvalidGroup(String),

    #[error("invalid field specification: {0}")]
    InvalidField(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    EnumerationBound { order: u128, bound: u128 },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("division by zero in field arithmetic")]
    ZeroInverse,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("matrix determinant is not 1")]
    WrongDeterminant,

    #[error("probability {0} is invalid")]
    InvalidProbability(String),

    #[error("arithmetic mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported representation: {0}")]
    UnsupportedRep(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = MixError> = std::result::Result<T, E>;
