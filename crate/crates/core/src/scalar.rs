//! Scalar abstraction shared by the special-function and conical layers.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point type the evaluators are generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossless for every literal used in this crate when `Self = f64`.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

pub(crate) fn cr<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|a - b| / max(|b|, floor)`.
pub fn rel_diff<T: Real>(a: Complex<T>, b: Complex<T>, floor: T) -> T {
    (a - b).norm() / b.norm().max(floor)
}
