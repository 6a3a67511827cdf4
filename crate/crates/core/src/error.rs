use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group parameters (n={n}, m={m}, r={r}): {reason}")]
    InvalidTwist { n: u32, m: u32, r: u32, reason: String },

    #[error("no element of multiplicative order {order} modulo {modulus}")]
    NoSuchRoot { modulus: u64, order: u64 },

    #[error("{what} exceeds the configured bound {bound}")]
    BoundExceeded { what: String, bound: usize },

    #[error("signature {0} is not hyperbolic")]
    NotHyperbolic(String),

    #[error("order multiplier {0} is not supported")]
    UnsupportedOrder(u64),

    #[error("orbit genus {0} is not supported here")]
    UnsupportedGenus(u32),

    #[error("subgroup does not belong to the acting group")]
    NotASubgroup,

    #[error("braid index {index} out of range for {len} periods")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("vectors belong to different groups or signatures")]
    GroupMismatch,

    #[error("word {position}: image has order {found}, expected {expected}")]
    OrderMismatch { position: usize, expected: u32, found: u32 },

    #[error("Teichmüller dimensions differ ({sub} vs {sup})")]
    DimensionMismatch { sub: i64, sup: i64 },

    #[error("q={0} is not prime")]
    NotPrime(u64),

    #[error("genus {0} is below 8")]
    GenusTooSmall(u64),

    #[error("representation theory unavailable for {0}")]
    UnsupportedGroup(String),

    #[error("fixed-subspace dimension is not an integer (internal inconsistency)")]
    NonIntegralDimension,

    #[error("subgroup collection is not admissible")]
    NotAdmissible,

    #[error("invalid generating vector: {0}")]
    InvalidVector(String),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("word table {0} needs parameters l, m, r")]
    MissingParameters(String),

    #[error("no isomorphism onto {0}")]
    NoIsomorphism(String),
}
