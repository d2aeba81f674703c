//! Floating point abstraction used by the disk-geometry kernel.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar for plane geometry: `f32` or `f64`.
///
/// The tolerances are applied to normalized coordinates (maximum pairwise
/// center distance equal to one).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Absolute band on support margins inside which containment is reported as marginal.
    fn default_eps() -> Self;

    /// Angular intervals shorter than this are treated as empty by the hull sweep.
    fn angle_slack() -> Self;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }
}

impl Scalar for f64 {
    fn default_eps() -> Self {
        1e-9
    }

    fn angle_slack() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn default_eps() -> Self {
        1e-5
    }

    fn angle_slack() -> Self {
        1e-6
    }
}

/// Reduce an angle to `[0, 2π)`.
pub fn wrap_angle<T: Scalar>(theta: T) -> T {
    let tau = T::TAU();
    let mut t = theta % tau;
    if t < T::zero() {
        t = t + tau;
    }
    if t >= tau {
        t = t - tau;
    }
    t
}
