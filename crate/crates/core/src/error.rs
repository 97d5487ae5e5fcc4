use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (symmetry violation {violation:e})")]
    NotHermitian { violation: f64 },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operator has zero Hilbert-Schmidt norm")]
    ZeroOperator,

    #[error("distribution has zero total weight")]
    ZeroWeight,

    #[error("inverse temperature must be finite and >= 0, got {0}")]
    InvalidBeta(f64),

    #[error("time must be >= 0, got {0}")]
    NegativeTime(f64),

    #[error("populations are not a probability distribution: {0}")]
    InvalidPopulations(String),

    #[error("state is not normalized (norm^2 = {0})")]
    UnnormalizedState(f64),

    #[error("{quantity} vanishes; the requested time scale is infinite")]
    ZeroScale { quantity: &'static str },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("integration window too short: kernel tail {tail:e} exceeds {tolerance:e}")]
    InsufficientWindow { tail: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
