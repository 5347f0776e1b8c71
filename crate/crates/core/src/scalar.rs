//! Utility scalar abstraction.
//!
//! Utilities are non-negative integers. Every comparison between outcome
//! values is done by cross-multiplying sums by outcome sizes, so the scalar
//! only needs exact unsigned integer arithmetic. Primitive `u64`/`u128` are
//! fast; [`num_bigint::BigUint`] never overflows and is what the hardness
//! reduction needs once utilities reach `(m + 1)^(m - 1)`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::ToBigUint;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, Num, ToPrimitive, Unsigned};

/// Exact non-negative integer utility type.
pub trait Utility:
    Num
    + Unsigned
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedMul
    + ToBigUint
    + Send
    + Sync
    + 'static
{
    /// Converts a small count (outcome size, candidate count) into the scalar.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits in utility scalar")
    }

    /// `base^exp`, or `None` if it does not fit.
    fn checked_pow(base: usize, exp: usize) -> Option<Self> {
        let base = Self::from_usize(base)?;
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.checked_mul(&base)?;
        }
        Some(acc)
    }
}

impl<T> Utility for T where
    T: Num
        + Unsigned
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedMul
        + ToBigUint
        + Send
        + Sync
        + 'static
{
}
