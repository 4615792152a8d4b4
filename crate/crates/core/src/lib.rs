//! Conical (Mehler) Ferrers functions of imaginary order and a numerical
//! verification engine for their Dirac-delta orthogonality relations.
//!
//! The evaluators ([`special`], [`conical`], [`kernels`]) are generic over the
//! real scalar type; [`verify`] and [`report`] work in `f64`.

pub mod conical;
pub mod error;
pub mod kernels;
pub mod report;
pub mod scalar;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Degree64 = conical::Degree<f64>;
pub type Order64 = conical::Order<f64>;
pub type EvalPoint64 = conical::EvalPoint<f64>;
