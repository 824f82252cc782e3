use thiserror::Error;

/// Errors reported by constructors and range-checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window entry at position {position} is zero")]
    ZeroEntry { position: usize },
    #[error("absolute values of the window are not a permutation of 1..=n (offending value {value})")]
    NotAPermutation { value: i64 },
    #[error("expected {expected} window entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rank mismatch: left operand has n={left}, right operand has n={right}")]
    RankMismatch { left: usize, right: usize },
    #[error("operation needs rank n >= 2, got n={n}")]
    RankTooSmall { n: usize },
    #[error("class index {j} out of range for n={n} (need 1 <= |j| <= n)")]
    IndexOutOfRange { j: i64, n: usize },
    #[error("inversion-table digit {digit} at index {index} exceeds its bound {bound}")]
    DigitOutOfRange { index: usize, digit: u64, bound: u64 },
    #[error("rank {rank} out of range for B_{n} (group order {order})")]
    RankOutOfRange { rank: String, n: usize, order: String },
    #[error("n={n} exceeds the enumeration ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("class index {j} invalid for n={n} (j = 0 or |j| > n)")]
    BadClassIndex { j: i64, n: usize },
    #[error("Cayley-length oracle is limited to n <= {max}, got n={n}")]
    RankTooLargeForOracle { n: usize, max: usize },
    #[error("argument out of the formula's validity range: {what}")]
    RangeViolation { what: String },
    #[error("cannot parse window token {token:?}")]
    BadToken { token: String },
}

pub type Result<T> = std::result::Result<T, Error>;
