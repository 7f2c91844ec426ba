use thiserror::Error;

/// Errors surfaced by the library. Violated mathematical invariants that can
/// only come from a bug are assertions, not variants of this enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid q = {0}: must be a rational other than 0, 1 and -1")]
    InvalidQ(String),
    #[error("invalid highest weight {0:?}: entries must be weakly decreasing")]
    InvalidHighestWeight(Vec<i64>),
    #[error("weights have different lengths ({0} and {1})")]
    RankMismatch(usize, usize),
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("not a polynomial: exponent {0} is negative")]
    NotAPolynomial(i32),
    #[error("evaluation point must be nonzero")]
    ZeroEvaluationPoint,
    #[error("evaluation parameter must be nonzero")]
    ZeroParameter,
    #[error("sign vector must contain only 1 and -1")]
    InvalidSigns,
    #[error("not a reducible configuration for the singular-vector construction: {0}")]
    NotReducibleConfiguration(String),
    #[error("burnside bound: module dimension {dim} exceeds the limit {bound}")]
    BurnsideBound { dim: usize, bound: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
