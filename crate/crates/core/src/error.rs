use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial is not homogeneous: found terms of degree {first} and {other}")]
    NotHomogeneous { first: u32, other: u32 },
    #[error("variable x{index} is out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("subset of variables must be non-empty")]
    EmptySubset,
    #[error("degree {0} is odd; an even degree is required")]
    OddDegree(u32),
    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,
    #[error("degree {0} is too small; at least 2 is required")]
    DegreeTooSmall(u32),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("degenerate specialization: the Macaulay denominator minor vanishes")]
    Degenerate,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial vanishes at 0; divide out the root at 0 first")]
    RootAtZero,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
