use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("{0}")]
    OutOfRange(String),

    #[error("square root of negative value {0}")]
    NegativeRadicand(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("zero has infinite valuation")]
    InfiniteValuation,

    #[error("{0} is not a valid descriptor modulus (needs 4 | N and N + 1 prime)")]
    InvalidModulus(u64),

    #[error("amplitudes sum to {0}, expected 1")]
    NotNormalized(String),

    #[error("minimal polynomial for root-of-unity order {order} exceeds the materialization cap {cap}")]
    DegreeCap { order: u64, cap: u64 },

    #[error("empty ensemble")]
    EmptyEnsemble,

    #[error("points are incompatible: {0}")]
    Incompatible(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
