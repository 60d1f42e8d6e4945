use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("denominator vanishes at the specialisation point")]
    DenominatorVanishes,
    #[error("specialisation parameter must be nonzero")]
    ZeroParameter,
    #[error("entries belong to different scalar domains: {0}")]
    MixedDomains(String),
    #[error("subspaces live in ambient spaces of dimension {0} and {1}")]
    AmbientMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("tableau shapes differ: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("Hecke elements of rank {0} and {1} cannot be combined")]
    RankMismatch(usize, usize),
    #[error("Hecke elements use different parameters or scalar domains")]
    DomainMismatch,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("summands were built with different n, q or scalar domain")]
    MixedParameters,
    #[error("module is not a direct sum of Young permutation modules")]
    NotAYoungSum,
    #[error("scalar domain {0} is not a field")]
    DomainNotField(String),
    #[error("endomorphism basis does not belong to this module")]
    BasisMismatch,
    #[error("integral computations need q = 1, got {0}")]
    NonIntegralParameter(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("triangularity violated at lambda={lambda} s={s} t={t} u={u} v={v}")]
    TriangularityViolation {
        lambda: String,
        s: String,
        t: String,
        u: String,
        v: String,
    },
    #[error("permutation {0} is not an involution")]
    NotAnInvolution(String),
    #[error("module is not a sum of hook permutation modules")]
    NotAHookSum,
    #[error("expected a field of characteristic 2, got {0}")]
    WrongCharacteristic(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("two-sided ideal check failed: {0}")]
    IdealCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
