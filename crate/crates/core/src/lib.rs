//! Exact root-system combinatorics for elliptic adjoint orbits.
//!
//! The crate decides whether a non-zero elliptic element `T` of an
//! equal-rank real form admits a fundamental system of simple roots on
//! which `-iT` is dominant and every simple root with `β(T) ≠ 0` is
//! compact. Everything is computed in simple-root coordinates with exact
//! integer and rational arithmetic:
//!
//! * [`rootcore`] builds finite crystallographic root systems.
//! * [`weyl`] enumerates the Weyl group as permutations of roots.
//! * [`kostant`] computes the grading by `T`, the Levi Weyl subgroup,
//!   minimal coset representatives and generalized Bruhat cell data.
//! * [`realform`] colors roots compact/noncompact for an inner involution.
//! * [`criterion`] enumerates dominant chambers and checks the condition.
//! * [`checks`] bundles the invariant suites used for self-verification.

pub mod checks;
pub mod criterion;
mod error;
pub mod kostant;
pub mod rational;
pub mod realform;
pub mod rootcore;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rational;
