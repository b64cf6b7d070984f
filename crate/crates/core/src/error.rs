use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroN,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("graph has a loop at vertex {0} and cannot be coloured")]
    Looped(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{what} too large: {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("the zero sign vector is not allowed here")]
    ZeroSignVector,

    #[error("{vector} is not a covector of the alternating matroid of rank {rank}")]
    NotCovector { vector: String, rank: usize },

    #[error("sign vector length {len} does not match m = {m}")]
    LengthMismatch { len: usize, m: usize },

    #[error("graph vertices carry no circular-set labels")]
    MissingLabels,

    #[error("the group action does not preserve the edge set")]
    ActionNotAutomorphism,

    #[error("vertex sum for {0} vanishes")]
    DegenerateVertexSum(String),

    #[error("no stable {n}-subset inside {set}")]
    NoStableSubset { n: usize, set: String },

    #[error("series with vanishing constant term is not invertible")]
    NotInvertible,

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("restriction {hom} is not defined on {ring}")]
    InvalidRestriction { hom: String, ring: String },

    #[error("parse error: {0}")]
    Parse(String),
}
