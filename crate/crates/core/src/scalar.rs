//! Scalar types for class functions and series.
//!
//! Class functions are generic over [`Scalar`] so the same convolution code runs
//! on exact rationals (counts, distributions), plain floats, and complex
//! character values. Lie-family series are generic over [`Real`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// A value a class function can take.
pub trait Scalar: Num + Clone + Debug + Send + Sync + 'static {
    /// Embeds an integer count.
    fn from_count(n: i64) -> Self;

    /// Complex floating-point view, used when pairing with characters.
    fn to_complex(&self) -> Complex64;
}

impl Scalar for BigRational {
    fn from_count(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Scalar for f64 {
    fn from_count(n: i64) -> Self {
        n as f64
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl Scalar for f32 {
    fn from_count(n: i64) -> Self {
        n as f32
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(f64::from(*self), 0.0)
    }
}

impl Scalar for Complex64 {
    fn from_count(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Floating-point type for Lie-family series: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Debug + Send + Sync + 'static {
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).unwrap_or_else(Self::infinity)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Compensated (Neumaier) summation.
#[derive(Debug, Clone, Copy)]
pub struct NeumaierSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Real> Default for NeumaierSum<T> {
    fn default() -> Self {
        Self {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }
}

impl<T: Real> NeumaierSum<T> {
    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation = self.compensation + ((self.sum - t) + x);
        } else {
            self.compensation = self.compensation + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn merge(&mut self, other: &Self) {
        self.add(other.sum);
        self.add(other.compensation);
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }
}
