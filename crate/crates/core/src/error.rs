use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("inner series has nonzero constant term {0}")]
    NonzeroInnerConstantTerm(f64),

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("radius {0} is outside [0, 1)")]
    RadiusOutOfRange(f64),

    #[error("not a valid Schwarz function: {0}")]
    InvalidSchwarz(String),

    #[error("function is not a shipped univalent witness")]
    NotAUnivalentWitness,

    #[error("inconclusive verdict persisted after the full precision ladder at r = {0}")]
    BudgetExhausted(f64),

    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),

    #[error("series must have at least one coefficient")]
    EmptySeries,

    #[error("requested degree {requested} exceeds inner series degree {available}")]
    DegreeMismatch { requested: usize, available: usize },

    #[error("missing input `{0}`")]
    MissingInput(&'static str),

    #[error("cannot parse function spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
