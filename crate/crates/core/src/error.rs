use crate::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parts {parts:?} are not weakly decreasing")]
    NotDecreasing { parts: Vec<i64> },

    #[error("negative part in {parts:?}")]
    NegativePart { parts: Vec<i64> },

    #[error("partition {partition} has more than {k} nonzero parts")]
    TooManyParts { partition: Partition, k: usize },

    #[error("partition {partition} is not in the alcove A_{{{k},{n}}}")]
    NotInAlcove { partition: Partition, k: usize, n: usize },

    #[error("window {window:?} is not an affine permutation of period {k}")]
    NotBijective { window: Vec<i64>, k: usize },

    #[error("window of length {len} does not match period {k}")]
    WindowLength { len: usize, k: usize },

    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },

    #[error("level mismatch: (k={k1}, n={n1}) vs (k={k2}, n={n2})")]
    LevelMismatch { k1: usize, n1: usize, k2: usize, n2: usize },

    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },

    #[error("generator index {index} invalid for k={k}")]
    InvalidGenerator { index: usize, k: usize },

    #[error("parameter `{name}` must be positive")]
    NonPositive { name: &'static str },

    #[error("cannot specialise z to zero")]
    ZeroSpecialisation,

    #[error("S-matrix entry S[{nu}][{alpha}] has magnitude {magnitude:e}")]
    SmallSEntry { nu: Partition, alpha: Partition, magnitude: f64 },

    #[error("Verlinde value {value} for ({lambda}, {mu}, {nu}) is not within {tol:e} of an integer")]
    NotIntegral { lambda: Partition, mu: Partition, nu: Partition, value: String, tol: f64 },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("csv export failed: {0}")]
    Csv(String),
}
