//! Scalar abstraction over the numeric type used for error values and weights.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Numeric type backing error values and case weights.
///
/// Error values compare with exact numeric equality for elite membership, and
/// weights hold small integer-valued counts, so any IEEE float works. `f64` is
/// the default used by the harnesses and the CLI; `f32` is also supported.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossless for the small counts produced by the bias metrics.
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count representable as scalar")
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
