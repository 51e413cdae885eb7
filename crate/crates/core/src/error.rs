use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("function table entry {value} at position {position} is outside codomain of size {codomain}")]
    TableOutOfRange {
        position: usize,
        value: usize,
        codomain: usize,
    },

    #[error("alphabet sizes must be positive")]
    EmptyAlphabet,

    #[error("negative probability weight {0}")]
    NegativeWeight(String),

    #[error("weights sum to {0}, expected exactly 1")]
    NonNormalized(String),

    #[error("source cannot be converted into target")]
    NotConvertible,

    #[error("extremal comb count {required} exceeds budget of {budget}")]
    ResourceBudgetExceeded { required: String, budget: usize },

    #[error("output {0} has zero marginal probability")]
    ZeroMarginal(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::SizeMismatch(msg.into())
    }
}
