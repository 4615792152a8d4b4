//! Ferrers functions of imaginary order through the hypergeometric
//! representation
//!
//! ```text
//! P^{iq}_lambda(x) = e^{iqt} / Gamma(1 - iq) * 2F1(-lambda, lambda + 1; 1 - iq; (1 - x)/2),   t = atanh x
//! ```
//!
//! and `Q` through the connection formula with `P^{-iq}`. Derivatives are
//! analytic: product rule over the phase `e^{iqt}` and the 2F1 factor, with
//! `d/dz 2F1(a, b; c; z) = (ab/c) 2F1(a + 1, b + 1; c + 1; z)`.

use num_complex::Complex;

use super::types::{Degree, EvalPoint, Kind, Order};
use crate::error::{Error, Result};
use crate::scalar::{c, cr, Real};
use crate::special::{cos_pi, gamma_ratio, hyp2f1_split, recip_gamma, sin_pi};

/// Smallest `|q|` accepted wherever `sin(pi i q)` appears in a denominator.
pub const Q_ORDER_MIN: f64 = 1e-6;

/// A function value with its first and second `x`-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T: Real> {
    pub value: Complex<T>,
    pub d1: Complex<T>,
    pub d2: Complex<T>,
}

impl<T: Real> Jet<T> {
    fn scale(self, k: Complex<T>) -> Self {
        Self { value: self.value * k, d1: self.d1 * k, d2: self.d2 * k }
    }

    fn add(self, o: Self) -> Self {
        Self { value: self.value + o.value, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

fn hyp_at<T: Real>(a: Complex<T>, b: Complex<T>, cc: Complex<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    hyp2f1_split(a, b, cc, pt.z(), pt.one_minus_z(), pt.ln_one_minus_z())
}

/// `P^{iq}_lambda` and as many derivatives as `depth` asks for (0, 1 or 2).
fn p_jet<T: Real>(d: &Degree<T>, q: T, pt: &EvalPoint<T>, depth: u8) -> Result<Jet<T>> {
    let one = cr(T::one());
    let iq = c(T::zero(), q);
    let a = -d.lambda();
    let b = d.lambda() + one;
    let cc = one - iq;
    let phase = (iq * pt.atanh()).exp() * recip_gamma(cc)?;

    let f0 = hyp_at(a, b, cc, pt)?;
    let mut jet = Jet { value: phase * f0, d1: cr(T::zero()), d2: cr(T::zero()) };
    if depth == 0 {
        return Ok(jet);
    }

    let half = T::lit(0.5);
    let s = pt.one_minus_x2();
    // g = 2F1(z(x)), dz/dx = -1/2
    let f1 = a * b / cc * hyp_at(a + one, b + one, cc + one, pt)?;
    let g1 = -f1 * half;
    // e = e^{iqt}: e' = iq/(1-x^2) e
    let e1 = iq / s;
    jet.d1 = phase * (e1 * f0 + g1);
    if depth == 1 {
        return Ok(jet);
    }

    let two = T::lit(2.0);
    let f2 = a * (a + one) * b * (b + one) / (cc * (cc + one))
        * hyp_at(a + two, b + two, cc + two, pt)?;
    let g2 = f2 * T::lit(0.25);
    let e2 = (iq * two * pt.x() + iq * iq) / (s * s);
    jet.d2 = phase * (e2 * f0 + e1 * g1 * two + g2);
    Ok(jet)
}

fn check_order<T: Real>(o: Order<T>) -> Result<()> {
    if o.q().abs() < T::lit(Q_ORDER_MIN) {
        return Err(Error::OrderSingularity {
            q: o.q().to_f64().unwrap_or(f64::NAN),
            min: Q_ORDER_MIN,
        });
    }
    Ok(())
}

/// `Gamma(lambda + mu + 1) / Gamma(lambda - mu + 1)` with `mu = iq`.
fn connection_ratio<T: Real>(d: &Degree<T>, o: Order<T>) -> Result<Complex<T>> {
    let one = cr(T::one());
    gamma_ratio(d.lambda() + o.mu() + one, d.lambda() - o.mu() + one)
}

fn q_jet<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>, depth: u8) -> Result<Jet<T>> {
    check_order(o)?;
    let mu = o.mu();
    let k = cr(T::PI()) / (sin_pi(mu) * T::lit(2.0));
    let plus = p_jet(d, o.q(), pt, depth)?;
    let minus = p_jet(d, -o.q(), pt, depth)?;
    let ratio = connection_ratio(d, o)?;
    Ok(plus.scale(cos_pi(mu) * k).add(minus.scale(-ratio * k)))
}

/// Value and derivatives of either function.
pub fn eval_jet<T: Real>(kind: Kind, d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Jet<T>> {
    match kind {
        Kind::P => p_jet(d, o.q(), pt, 2),
        Kind::Q => q_jet(d, o, pt, 2),
    }
}

/// Value of either function, without derivatives.
pub fn eval<T: Real>(kind: Kind, d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    match kind {
        Kind::P => eval_p(d, o, pt),
        Kind::Q => eval_q(d, o, pt),
    }
}

/// Ferrers function of the first kind `P^{iq}_lambda(x)`.
pub fn eval_p<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    Ok(p_jet(d, o.q(), pt, 0)?.value)
}

/// Ferrers function of the second kind `Q^{iq}_lambda(x)`:
///
/// ```text
/// Q = pi / (2 sin(pi mu)) * (cos(pi mu) P^{mu} - Gamma(lambda+mu+1)/Gamma(lambda-mu+1) P^{-mu})
/// ```
///
/// Requires `|q| >= 1e-6`.
pub fn eval_q<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    Ok(q_jet(d, o, pt, 0)?.value)
}

pub fn eval_p_deriv<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    Ok(p_jet(d, o.q(), pt, 1)?.d1)
}

pub fn eval_q_deriv<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    Ok(q_jet(d, o, pt, 1)?.d1)
}

/// `P^{iq}_lambda(-x)` from values at `+x` only, through the reflection relation
///
/// ```text
/// P^mu(-x) = cos(pi(lambda+mu)) P^mu(x) - (2/pi) sin(pi(lambda+mu)) Q^mu(x).
/// ```
///
/// With `Q` expanded by the connection formula the `P^mu(x)` coefficient
/// collapses to `-sin(pi lambda)/sin(pi mu)`, which avoids the cancellation
/// between two terms of size `cosh(pi(nu + q))` that the literal form suffers
/// from for conical degrees. The result is
///
/// ```text
/// P^mu(-x) = sin(pi lambda) / sin(pi mu) [ R G P^{-mu}(x) - P^mu(x) ],
/// R = sin(pi(lambda+mu)) / sin(pi lambda) = cos(pi mu) + sin(pi mu) cot(pi lambda),
/// G = Gamma(lambda+mu+1)/Gamma(lambda-mu+1).
/// ```
///
/// The bracket still cancels strongly when `|nu|` is large and `q` small, so
/// `R` is formed from the cotangent rather than from two large sines, unless
/// the two terms of that sum cancel in turn.
pub fn eval_p_reflected<T: Real>(d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<Complex<T>> {
    check_order(o)?;
    let mu = o.mu();
    let lambda = d.lambda();
    let plus = eval_p(d, o, pt)?;
    let minus = eval_p(d, o.negate(), pt)?;
    let ratio = connection_ratio(d, o)?;
    let s_lambda = sin_pi(lambda);
    if s_lambda.norm() == T::zero() {
        return Ok(sin_pi(lambda + mu) * ratio * minus / sin_pi(mu));
    }
    let (r1, r2) = (cos_pi(mu), sin_pi(mu) * cos_pi(lambda) / s_lambda);
    let r = if (r1 + r2).norm() >= T::lit(0.5) * r1.norm().max(r2.norm()) {
        r1 + r2
    } else {
        sin_pi(lambda + mu) / s_lambda
    };
    Ok(s_lambda / sin_pi(mu) * (r * ratio * minus - plus))
}

/// The literal two-term reflection `cos(pi(lambda+mu)) P - (2/pi) sin(pi(lambda+mu)) Q`.
pub fn eval_p_reflected_literal<T: Real>(
    d: &Degree<T>,
    o: Order<T>,
    pt: &EvalPoint<T>,
) -> Result<Complex<T>> {
    let theta = d.lambda() + o.mu();
    let p = eval_p(d, o, pt)?;
    let q = eval_q(d, o, pt)?;
    Ok(cos_pi(theta) * p - sin_pi(theta) * q * (T::lit(2.0) / T::PI()))
}

/// Scaled residual of the Legendre equation
///
/// ```text
/// d/dx[(1 - x^2) w'] + [lambda(lambda+1) + q^2/(1 - x^2)] w
/// ```
///
/// divided by the sum of the magnitudes of its four terms. The second
/// derivative comes from differentiating the series twice, never from the
/// equation itself.
pub fn ode_residual<T: Real>(kind: Kind, d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> Result<T> {
    let jet = eval_jet(kind, d, o, pt)?;
    Ok(residual_of(&jet, d, o, pt))
}

pub(crate) fn residual_of<T: Real>(jet: &Jet<T>, d: &Degree<T>, o: Order<T>, pt: &EvalPoint<T>) -> T {
    let s = pt.one_minus_x2();
    let x = pt.x();
    let two = T::lit(2.0);
    let terms = [
        jet.d2 * s,
        -jet.d1 * (two * x),
        d.eigenvalue() * jet.value,
        jet.value * (o.q() * o.q() / s),
    ];
    let residual = terms.iter().fold(cr(T::zero()), |acc, &t| acc + t);
    let scale = terms.iter().fold(T::zero(), |acc, t| acc + t.norm());
    if scale == T::zero() {
        T::zero()
    } else {
        residual.norm() / scale
    }
}
