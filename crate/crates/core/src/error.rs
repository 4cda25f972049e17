use thiserror::Error;

/// Errors raised by the combinatorial routines and the input parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    RaggedGenerator {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {index} has negative exponent {value}")]
    NegativeExponent { index: usize, value: i64 },
    #[error("the zero exponent generates the unit ideal, which has no Newton boundary")]
    UnitIdeal,
    #[error("point has a negative coordinate: {0}")]
    NegativeCoordinate(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(String),
    #[error("linear form is identically zero")]
    ZeroForm,
    #[error("face is not compact")]
    NoncompactFace,
    #[error("point {0} does not lie on the level-one hyperplane")]
    OffHyperplane(String),
    #[error("exponent list must be nonempty with entries >= {min}, got {found:?}")]
    InvalidExponents { min: u64, found: Vec<u64> },
    #[error("value does not fit in machine integers: {0}")]
    Overflow(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
