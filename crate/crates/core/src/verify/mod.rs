//! Numerical verification of the orthogonality relations: quadrature, the
//! exact truncated-interval identity, wave-packet estimates of delta
//! coefficients, classical fixtures and claim audits. Everything here is `f64`.

mod audit;
mod classical;
mod hermite;
mod identity;
mod quadrature;
mod smear;
mod suite;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::Q_MIN;

pub use audit::{
    audit_q_degree_conjugation, bielski_audit, conjugation_reports, j2_published_audit, kernel_comparison,
};
pub use classical::{classical_orthogonality_check, ferrers_integer_order, kalmykov_hutasoit_audit, CLASSICAL_L_MAX};
pub use hermite::gauss_hermite;
pub use identity::{truncated_identity, IDENTITY_TOL};
pub use quadrature::{integrate, integrate_t, Integral, QuadConfig};
pub use smear::{smear_estimate, SmearEstimate};
pub use suite::{full_suite, SuiteConfig, Tolerances, AUDIT_X_GRID, CONJUGATION_GRID};

/// Floor of the denominator in [`VerificationReport::rel_error`].
pub const REL_FLOOR: f64 = 1e-12;

/// Gaussian window `amplitude * exp(-(q' - center)^2 / (2 width^2))` over the second order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavePacket {
    center: f64,
    width: f64,
    amplitude: f64,
}

impl WavePacket {
    /// Unit-amplitude packet. Requires `width > 0` and `|center| >= 3 width + Q_MIN`,
    /// which keeps the packet and its mirror image apart and off the `q = 0` pole.
    pub fn new(center: f64, width: f64) -> Result<Self> {
        Self::with_amplitude(center, width, 1.0)
    }

    pub fn with_amplitude(center: f64, width: f64, amplitude: f64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::PacketOverlap(format!("width must be positive, got {width}")));
        }
        if !(center.abs() >= 3.0 * width + Q_MIN) {
            return Err(Error::PacketOverlap(format!(
                "|center| = {} is below 3 * width + {Q_MIN} = {}",
                center.abs(),
                3.0 * width + Q_MIN
            )));
        }
        if !amplitude.is_finite() {
            return Err(Error::Parameter(format!("amplitude must be finite, got {amplitude}")));
        }
        Ok(Self { center, width, amplitude })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// The same packet centred at `-center`.
    pub fn mirrored(&self) -> Self {
        Self { center: -self.center, ..*self }
    }

    /// Unit-amplitude profile at `q`.
    pub fn shape(&self, q: f64) -> f64 {
        let u = (q - self.center) / self.width;
        (-0.5 * u * u).exp()
    }

    pub fn value(&self, q: f64) -> f64 {
        self.amplitude * self.shape(q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Measured and reported, with no pass/fail claim attached.
    Recorded,
}

/// One verified (or audited) claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    #[serde(with = "complex_serde")]
    pub predicted: Complex64,
    #[serde(with = "complex_serde")]
    pub estimated: Complex64,
    #[serde(with = "nullable")]
    pub abs_error: f64,
    #[serde(with = "nullable")]
    pub rel_error: f64,
    #[serde(with = "nullable")]
    pub tolerance: f64,
    pub status: Status,
    pub detail: String,
}

impl VerificationReport {
    /// Report with errors filled in and status left to the caller.
    pub fn measured(id: impl Into<String>, predicted: Complex64, estimated: Complex64, tolerance: f64) -> Self {
        let abs_error = (predicted - estimated).norm();
        Self {
            id: id.into(),
            predicted,
            estimated,
            abs_error,
            rel_error: abs_error / predicted.norm().max(REL_FLOOR),
            tolerance,
            status: Status::Recorded,
            detail: String::new(),
        }
    }

    /// Pass iff `rel_error <= tolerance`.
    pub fn relative(id: impl Into<String>, predicted: Complex64, estimated: Complex64, tolerance: f64) -> Self {
        let mut r = Self::measured(id, predicted, estimated, tolerance);
        r.status = if r.rel_error <= tolerance { Status::Pass } else { Status::Fail };
        r
    }

    /// Relative error taken against `reference` instead of `|predicted|`;
    /// pass iff it is within `tolerance`.
    pub fn against(
        id: impl Into<String>,
        predicted: Complex64,
        estimated: Complex64,
        tolerance: f64,
        reference: f64,
    ) -> Self {
        let mut r = Self::measured(id, predicted, estimated, tolerance);
        r.rel_error = r.abs_error / reference.max(REL_FLOOR);
        r.status = if r.rel_error <= tolerance { Status::Pass } else { Status::Fail };
        r
    }

    /// A claim that could not be evaluated.
    pub fn failed(id: impl Into<String>, err: &Error) -> Self {
        Self {
            id: id.into(),
            predicted: Complex64::new(f64::NAN, f64::NAN),
            estimated: Complex64::new(f64::NAN, f64::NAN),
            abs_error: f64::NAN,
            rel_error: f64::NAN,
            tolerance: f64::NAN,
            status: Status::Fail,
            detail: err.to_string(),
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Re-applies a tolerance override to the relative error of a pass/fail
    /// report. Recorded reports are unchanged.
    pub fn rejudged(mut self, tolerance: f64) -> Self {
        if self.status == Status::Recorded {
            return self;
        }
        self.tolerance = tolerance;
        self.status = if self.rel_error <= tolerance { Status::Pass } else { Status::Fail };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `{re, im}` objects; non-finite parts become `null`.
mod complex_serde {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Parts {
        re: Option<f64>,
        im: Option<f64>,
    }

    fn finite(v: f64) -> Option<f64> {
        v.is_finite().then_some(v)
    }

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        Parts { re: finite(z.re), im: finite(z.im) }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let p = Parts::deserialize(d)?;
        Ok(Complex64::new(p.re.unwrap_or(f64::NAN), p.im.unwrap_or(f64::NAN)))
    }
}

/// Plain numbers; non-finite values become `null`.
mod nullable {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}
