use thiserror::Error;

/// Errors raised by ideal construction, polyhedral computations and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero ideal is not supported (empty generator set)")]
    ZeroIdeal,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("dimension {dimension} exceeds the configured cap {cap}")]
    DimensionCap { dimension: usize, cap: usize },
    #[error("coordinate index {index} out of range for dimension {dimension}")]
    CoordinateOutOfRange { index: usize, dimension: usize },
    #[error("restriction to x{coordinate} = 0 is the zero ideal (every generator involves x{coordinate})")]
    ZeroRestriction { coordinate: usize },
    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,
    #[error("coefficient must be {requirement}, got {value}")]
    Coefficient { requirement: &'static str, value: String },
    #[error("scaled exponent {value} exceeds the configured bound {bound}")]
    ExponentBound { value: String, bound: u64 },
    #[error("ideal is not squarefree: generator {generator:?} has an exponent above 1")]
    NotSquarefree { generator: Vec<u32> },
    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid resolution datum: {0}")]
    Resolution(String),
    #[error("exponent overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
