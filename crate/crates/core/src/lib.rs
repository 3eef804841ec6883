//! Exact counting of Schreier and Zeckendorf subsets of `{1, ..., n}`.
//!
//! Every counted family is available three ways: through a closed form in
//! Fibonacci numbers (or a binomial sum), through a linear recurrence, and
//! through brute-force enumeration of subsets. The [`counts::verify_family`]
//! and [`bijection::verify_bijection`] entry points compare those routes.
//!
//! Arithmetic is generic over [`CountScalar`]; the crate-level aliases pick
//! [`BigUint`](num_bigint::BigUint) so that no value ever wraps.

pub mod bijection;
pub mod counts;
pub mod enumerate;
mod error;
pub mod fib;
mod scalar;
pub mod sets;

pub use error::{Error, Precondition, Result};
pub use scalar::CountScalar;

/// Arbitrary-precision nonnegative count.
pub type Count = num_bigint::BigUint;

/// Fibonacci table over exact counts.
pub type FibTable = fib::Fibonacci<Count>;

/// Sequence evaluator over exact counts.
pub type SequenceTable = counts::Sequences<Count>;

pub use bijection::{forward, inverse, verify_bijection, BijectionCheckReport};
pub use counts::{Gap, SequenceFamily, VerificationReport, VerificationRow};
pub use enumerate::{MaxConstraint, MaxParity, Oracle, PredicateSpec, SchreierKind};
pub use fib::{fib, fib_prefix_sum};
pub use sets::{FiniteSet, GapList};
