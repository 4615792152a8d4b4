//! Delta kernels: a pairing of two Ferrers functions of orders `iq`, `iq'`
//! over (-1, 1) with weight `1/(1 - x^2)` is represented by the coefficient
//! pair `(A(q), B(q))` of
//!
//! ```text
//! A(q) delta(q - q') + B(q) delta(q + q').
//! ```
//!
//! Identities between such pairings then become algebra on coefficient
//! functions: a multiplier depending on `q'` is evaluated at `q' = q` in the
//! `A` slot and at `q' = -q` in the `B` slot.

mod closed_form;
mod conjugation;
mod derivation;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use std::sync::Arc;

use num_complex::Complex;

use crate::conical::{Degree, Kind};
use crate::error::{Error, Result};
use crate::scalar::{cr, Real};

pub use closed_form::{
    bielski_bracket, bielski_diag_coefficient, kernel, kernel_i1, kernel_i2, kernel_i3, kernel_j1, kernel_j2,
    kernel_j2_published, kernel_j3,
};
pub use conjugation::{check_conjugation, ConditionCheck, ConditionKind, ConjugationReport, CONJUGATION_TOL};
pub use derivation::{
    closure_deviation, derive, derive_i2, derive_i3, derive_j1, derive_j2, derive_j3, kernel_combine,
    kernel_combine_in_q, kernel_mirror, kernel_negate_order,
};

/// Coefficients are only defined for `|q| >= Q_MIN`; every kernel has a pole at `q = 0`.
pub const Q_MIN: f64 = 1e-3;

/// A coefficient function `q -> C`.
pub type Coefficient<T> = Arc<dyn Fn(T) -> Result<Complex<T>> + Send + Sync>;

/// `A(q) delta(q - q') + B(q) delta(q + q')`.
#[derive(Clone)]
pub struct DeltaKernel<T: Real> {
    label: String,
    a: Coefficient<T>,
    b: Coefficient<T>,
}

impl<T: Real> fmt::Debug for DeltaKernel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DeltaKernel").field("label", &self.label).finish_non_exhaustive()
    }
}

pub(crate) fn check_q<T: Real>(q: T) -> Result<()> {
    if !(q.abs() >= T::lit(Q_MIN)) {
        return Err(Error::CoefficientPole { q: q.to_f64().unwrap_or(f64::NAN), min: Q_MIN });
    }
    Ok(())
}

impl<T: Real> DeltaKernel<T> {
    pub fn new(
        label: impl Into<String>,
        a: impl Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
        b: impl Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
    ) -> Self {
        Self { label: label.into(), a: Arc::new(a), b: Arc::new(b) }
    }

    pub(crate) fn from_parts(label: String, a: Coefficient<T>, b: Coefficient<T>) -> Self {
        Self { label, a, b }
    }

    /// The kernel with both coefficients identically zero.
    pub fn zero() -> Self {
        Self::new("0", |_| Ok(cr(T::zero())), |_| Ok(cr(T::zero())))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Weight of `delta(q - q')`.
    pub fn a(&self, q: T) -> Result<Complex<T>> {
        check_q(q)?;
        (self.a)(q)
    }

    /// Weight of `delta(q + q')`.
    pub fn b(&self, q: T) -> Result<Complex<T>> {
        check_q(q)?;
        (self.b)(q)
    }

    pub fn eval(&self, q: T) -> Result<(Complex<T>, Complex<T>)> {
        Ok((self.a(q)?, self.b(q)?))
    }

    pub(crate) fn a_fn(&self) -> Coefficient<T> {
        Arc::clone(&self.a)
    }

    pub(crate) fn b_fn(&self) -> Coefficient<T> {
        Arc::clone(&self.b)
    }
}

/// Stable names of the six conical orthogonality relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KernelName {
    I1,
    I2,
    I3,
    J1,
    J2,
    J3,
}

impl KernelName {
    pub const ALL: [KernelName; 6] =
        [KernelName::I1, KernelName::I2, KernelName::I3, KernelName::J1, KernelName::J2, KernelName::J3];

    pub fn as_str(&self) -> &'static str {
        match self {
            KernelName::I1 => "I1",
            KernelName::I2 => "I2",
            KernelName::I3 => "I3",
            KernelName::J1 => "J1",
            KernelName::J2 => "J2",
            KernelName::J3 => "J3",
        }
    }

    /// Which functions are paired: `I` kernels pair at the same point, `J`
    /// kernels evaluate the conjugated factor at `-x`.
    pub fn pair_spec<T: Real>(&self, nu: T) -> KernelPairSpec<T> {
        let (left, right) = match self {
            KernelName::I1 | KernelName::J1 => (Kind::P, Kind::P),
            KernelName::I2 | KernelName::J2 => (Kind::P, Kind::Q),
            KernelName::I3 | KernelName::J3 => (Kind::Q, Kind::Q),
        };
        let reflection = match self {
            KernelName::I1 | KernelName::I2 | KernelName::I3 => Reflection::Same,
            _ => Reflection::Mirrored,
        };
        KernelPairSpec {
            left,
            right,
            pairing: Pairing::Conjugated,
            reflection,
            degree: Degree::conical(nu),
        }
    }
}

impl fmt::Display for KernelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelName::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown kernel {s:?} (expected I1..I3, J1..J3)")))
    }
}

/// `f g^*` (conjugated, the inner-product convention) or plain `f g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    Conjugated,
    Plain,
}

/// Whether the second factor is evaluated at `x` or at `-x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    Same,
    Mirrored,
}

/// The integral `int F_left^{iq}(x) G_right^{iq'}(+-x)^{(*)} dx / (1 - x^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPairSpec<T: Real> {
    pub left: Kind,
    pub right: Kind,
    pub pairing: Pairing,
    pub reflection: Reflection,
    pub degree: Degree<T>,
}
