use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, One, Zero};

use crate::{Error, Result};

/// Nonnegative integer type that sequence values are computed in.
///
/// Fixed-width types report [`Error::Overflow`] instead of wrapping, so
/// `u64` is usable for quick work and `BigUint` for anything large.
pub trait CountScalar:
    Clone
    + Debug
    + Display
    + Ord
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + Send
    + Sync
{
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Underflow)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    fn from_count(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }
}

impl<T> CountScalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + FromPrimitive
        + Send
        + Sync
{
}
