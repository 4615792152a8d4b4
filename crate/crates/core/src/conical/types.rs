use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{c, cr, Real};

/// Closest an [`EvalPoint`] built from `x` may come to the endpoints.
pub const X_MARGIN: f64 = 1e-12;

/// Degree `lambda` of a Ferrers function. Conical degrees carry `nu` with
/// `lambda = -1/2 + i nu` exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Degree<T: Real> {
    lambda: Complex<T>,
    nu: Option<T>,
}

impl<T: Real> Degree<T> {
    pub fn conical(nu: T) -> Self {
        Self { lambda: c(T::lit(-0.5), nu), nu: Some(nu) }
    }

    pub fn general(lambda: Complex<T>) -> Self {
        Self { lambda, nu: None }
    }

    pub fn integer(l: i32) -> Self {
        Self::general(cr(T::from_i32(l).expect("small integer")))
    }

    pub fn lambda(&self) -> Complex<T> {
        self.lambda
    }

    pub fn nu(&self) -> Option<T> {
        self.nu
    }

    pub fn is_conical(&self) -> bool {
        self.nu.is_some()
    }

    /// `lambda -> conj(lambda)`; for a conical degree this is `nu -> -nu`.
    pub fn conjugate(&self) -> Self {
        Self { lambda: self.lambda.conj(), nu: self.nu.map(|nu| -nu) }
    }

    /// `lambda (lambda + 1)`, the separation constant of the Legendre equation.
    pub fn eigenvalue(&self) -> Complex<T> {
        self.lambda * (self.lambda + T::one())
    }
}

/// Imaginary order `mu = i q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order<T: Real> {
    q: T,
}

impl<T: Real> Order<T> {
    pub fn new(q: T) -> Result<Self> {
        if q.is_finite() {
            Ok(Self { q })
        } else {
            Err(Error::Parameter(format!("order q = {q} is not finite")))
        }
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn mu(&self) -> Complex<T> {
        c(T::zero(), self.q)
    }

    pub fn negate(&self) -> Self {
        Self { q: -self.q }
    }
}

/// A point of the open interval (-1, 1).
///
/// Besides `x` it stores `t = atanh x` and the hypergeometric arguments
/// `(1 - x)/2`, `(1 + x)/2`, so that points built with [`EvalPoint::from_atanh`]
/// keep full relative accuracy even when `x` itself rounds to +-1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint<T: Real> {
    x: T,
    t: T,
    /// (1 - x) / 2
    z: T,
    /// (1 + x) / 2
    w: T,
    ln_z: T,
    ln_w: T,
}

impl<T: Real> EvalPoint<T> {
    pub fn new(x: T) -> Result<Self> {
        if !(x.abs() <= T::one() - T::lit(X_MARGIN)) {
            return Err(Error::Domain(format!("x = {x} (need |x| <= 1 - {X_MARGIN:e})")));
        }
        let half = T::lit(0.5);
        let ln2 = T::LN_2();
        Ok(Self {
            x,
            t: x.atanh(),
            z: (T::one() - x) * half,
            w: (T::one() + x) * half,
            ln_z: (-x).ln_1p() - ln2,
            ln_w: x.ln_1p() - ln2,
        })
    }

    /// The point `x = tanh t`; any finite `t` is accepted.
    pub fn from_atanh(t: T) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::Domain(format!("t = {t} is not finite")));
        }
        let two = T::lit(2.0);
        Ok(Self {
            x: t.tanh(),
            t,
            z: T::one() / (T::one() + (two * t).exp()),
            w: T::one() / (T::one() + (-two * t).exp()),
            ln_z: -softplus(two * t),
            ln_w: -softplus(-two * t),
        })
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn atanh(&self) -> T {
        self.t
    }

    /// `1 - x^2`, computed as `4 z w`.
    pub fn one_minus_x2(&self) -> T {
        T::lit(4.0) * self.z * self.w
    }

    pub(crate) fn z(&self) -> T {
        self.z
    }

    pub(crate) fn one_minus_z(&self) -> T {
        self.w
    }

    pub(crate) fn ln_one_minus_z(&self) -> T {
        self.ln_w
    }

    /// The point `-x`.
    pub fn reflect(&self) -> Self {
        Self {
            x: -self.x,
            t: -self.t,
            z: self.w,
            w: self.z,
            ln_z: self.ln_w,
            ln_w: self.ln_z,
        }
    }
}

/// `ln(1 + e^s)` without overflow.
fn softplus<T: Real>(s: T) -> T {
    if s > T::zero() {
        s + (-s).exp().ln_1p()
    } else {
        s.exp().ln_1p()
    }
}

/// Which Ferrers function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Kind {
    P,
    Q,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::P => "P",
            Kind::Q => "Q",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Kind::P),
            "Q" | "q" => Ok(Kind::Q),
            other => Err(Error::Parameter(format!("unknown function kind {other:?}"))),
        }
    }
}
