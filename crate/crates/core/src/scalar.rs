//! Scalar abstraction so the geometry kernel works over `f32` or `f64`.

use num_traits::{Float, FromPrimitive};
use std::fmt::Debug;

/// Floating-point scalar used throughout the geometry and simulation code.
///
/// Blanket-implemented for any type with the required numeric traits,
/// which in practice means `f32` and `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Send + Sync + 'static {}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Send + Sync + 'static {}

/// Convert an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn c<S: Scalar>(v: f64) -> S {
    S::from_f64(v).expect("scalar conversion")
}

/// Coincidence tolerance in coordinate units, shared by all modules.
#[inline]
pub fn geom_eps<S: Scalar>() -> S {
    c(1e-9)
}

/// Tolerance used when comparing event times.
#[inline]
pub fn time_eps<S: Scalar>() -> S {
    c(1e-9)
}
