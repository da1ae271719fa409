use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is below the supported range (p >= 5 required)")]
    PrimeTooSmall(u64),
    #[error("argument {0} out of range: {1}")]
    BadArgument(i64, &'static str),
    #[error("{num}/{den} is not {p}-integral (denominator divisible by {p})")]
    NotPIntegral { num: BigInt, den: BigInt, p: u64 },
    #[error("coefficient at (n={n}, r={r}, m={m}) is not {p}-integral: {num}/{den}")]
    NotPIntegralAt {
        n: i64,
        r: i64,
        m: i64,
        num: BigInt,
        den: BigInt,
        p: u64,
    },
    #[error("series has no invertible leading coefficient")]
    NonUnitLeading,
    #[error("ring mismatch: cannot combine modulus {left:?} with modulus {right:?}")]
    RingMismatch {
        left: Option<u64>,
        right: Option<u64>,
    },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: i64, right: i64 },
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: String, right: String },
    #[error("slice weight/index mismatch: ({wl},{il}) vs ({wr},{ir})")]
    SliceMismatch { wl: i64, il: i64, wr: i64, ir: i64 },
    #[error("slice m={m} not complete: expansion box is {box_bound}")]
    SliceNotComplete { m: i64, box_bound: i64 },
    #[error("lift input must have index 1, got {0}")]
    LiftIndexNotOne(i64),
    #[error("lift input must be holomorphic (weak flag set)")]
    LiftWeakInput,
    #[error("lift input q-precision {have} insufficient for box {box_bound} (need {need})")]
    LiftPrecision { have: i64, need: i64, box_bound: i64 },
    #[error("linear system singular while pinning Jacobi Eisenstein series of weight {0}")]
    SingularSystem(i64),
    #[error("construction integrity check failed: {0}")]
    ConstructionIntegrity(String),
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("empty regime k < p < 2k-5 for k={k}, p={p}")]
    EmptyRegime { k: i64, p: u64 },
    #[error("boundary case p = 2k-5 (k={k}, p={p}) is outside both branches")]
    BoundaryRegime { k: i64, p: u64 },
    #[error("unknown form name: {0}")]
    UnknownForm(String),
    #[error("file format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
