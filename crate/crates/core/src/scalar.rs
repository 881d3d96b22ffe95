//! Scalar abstraction shared by the geometric and angular code.
//!
//! Everything that compares angles or coordinates is written against
//! [`Scalar`], so the same code runs on exact rationals (the default used by
//! the pattern loader and generators) or on plain `f64` when exactness is not
//! required.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// A signed ordered field element.
///
/// Equality is whatever `PartialEq` says for the type; for [`crate::Rational`]
/// it is exact, which the Big-Little-Big run detection relies on.
pub trait Scalar:
    Clone + Debug + PartialOrd + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable")
    }

    fn degrees(v: i64) -> Self {
        Self::from_int(v)
    }

    fn full_turn() -> Self {
        Self::from_int(360)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialOrd + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}
