use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is larger than the supported bound 2^16")]
    PrimeTooLarge(u64),
    #[error("exponent r must be at least 1")]
    ZeroExponent,
    #[error("p^r = {p}^{r} does not fit in 64 bits")]
    ModulusOverflow { p: u64, r: u32 },
    #[error("{0} is not a prime power p^r with r >= 1")]
    NotPrimePower(u64),
    #[error("{0} is not a unit")]
    NotAUnit(u64),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("position {pos} is outside 1..={q}")]
    PositionOutOfRange { pos: usize, q: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("operation is undefined for the zero vector")]
    ZeroVector,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("completion exceeded the limit of {0} pair reductions")]
    IterationLimitExceeded(u64),
    #[error("the PLM checker requires a field (r = 1), got r = {0}")]
    RingNotField(u32),
    #[error("p-basis validation failed: {0}")]
    ValidationFailed(String),
    #[error("vector is not in the p-span of the basis")]
    NotInModule,
    #[error(
        "expected exactly one p-basis vector with leading position 1 and full order, found {0}"
    )]
    PivotNotUnique(usize),
    #[error("enumeration of up to {size} candidates exceeds the cap of {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
