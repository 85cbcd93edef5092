use alloc::string::String;

/// Errors raised by the exact integration and transform routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("point is not on the unit sphere")]
    NotUnit,
    #[error("gamma function argument {two_n}/2 is not positive")]
    NonPositiveGamma { two_n: i64 },
    #[error("hypergeometric parameter c = {c_twice}/2 hits a pole within the summation range")]
    HypergeometricPole { c_twice: i64 },
    #[error("Gauss summation requires c > a + b")]
    Convergence,
    #[error("offset p = {0} must satisfy -1 < p < 1")]
    OffsetOutOfRange(String),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("cap coefficient requires 2k <= l (k = {k}, l = {l})")]
    CapOrder { k: u32, l: u32 },
    #[error("index j = {j} must not exceed k = {k}")]
    IndexOrder { j: u32, k: u32 },
    #[error("dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("dimension {0} must be even")]
    OddDimension(usize),
    #[error("input must be even on the sphere")]
    NotEven,
    #[error("input must be homogeneous of even degree")]
    NotEvenHomogeneous,
    #[error("zero eigenvalue")]
    ZeroEigenvalue,
}

pub type Result<T> = core::result::Result<T, Error>;
