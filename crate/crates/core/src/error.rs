use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{q} and {n} are not coprime")]
    NotCoprime { q: u64, n: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("length {n} exceeds the supported cap {cap}")]
    LengthCap { n: u64, cap: u64 },

    #[error("field of order {r}^{k} exceeds the 2^40 cap")]
    FieldCap { r: u64, k: u32 },

    #[error("enumeration would visit {required} candidates, cap is {cap}")]
    EnumerationCap { required: u128, cap: u128 },

    #[error("distance search would visit {required} codewords, cap is {cap}")]
    DistanceCap { required: u128, cap: u128 },

    #[error("length {0} is neither prime nor an odd prime power; unsupported")]
    UnsupportedLength(u64),

    #[error("p = 2 is not supported by the polynomial permutation groups")]
    EvenPrime,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u64, u64),

    #[error("objects are from different categories: {0}")]
    CategoryMismatch(String),

    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(String),

    #[error("the map is not a bijection")]
    NotBijective,

    #[error("division by zero in a finite field")]
    DivisionByZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
