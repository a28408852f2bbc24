use thiserror::Error;

use crate::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A root system component with an unknown family or an out-of-range rank.
    #[error("invalid root system component `{component}`: {reason}")]
    InvalidComponent { component: String, reason: String },

    #[error("T must be non-zero elliptic")]
    ZeroElliptic,

    /// `index` is 1-based, matching the usual α₁, α₂, ... labels.
    #[error("t is not dominant: simple root α{index} evaluates to {value}")]
    NotDominant { index: usize, value: Rational },

    #[error("{field} has length {got}, expected the rank {expected}")]
    RankMismatch {
        field: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("Weyl group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("internal consistency error: {0}")]
    Internal(String),
}
