//! Scalar abstractions.
//!
//! Correlation values are means of `±1` products, so every value is a ratio
//! `k / N` of integers. [`CcfScalar`] builds a scalar from such a ratio with a
//! single division, which keeps floating point results reproducible and lets
//! the same code run over exact rationals.
//!
//! GH residues are generic over [`Residue`], any unsigned primitive integer.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_rational::Ratio;
use num_traits::{Num, PrimInt, Signed, Unsigned};

pub trait CcfScalar: Num + Signed + Copy + PartialOrd + Debug + Send + Sync + 'static {
    /// `num / den`, computed with one division. `den` is positive.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(self) -> f64;
}

impl CcfScalar for f64 {
    #[inline]
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
}

impl CcfScalar for f32 {
    #[inline]
    fn from_ratio(num: i64, den: i64) -> Self {
        // through f64 so that the only rounding is the final narrowing
        (num as f64 / den as f64) as f32
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl CcfScalar for Ratio<i64> {
    #[inline]
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    #[inline]
    fn to_f64(self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// Unsigned integer type holding residues modulo `m`.
pub trait Residue: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static {}

impl<T: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static> Residue for T {}
