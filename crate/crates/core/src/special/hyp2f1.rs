//! Gauss hypergeometric function 2F1(a, b; c; z) for complex parameters and
//! real `z` in `[0, 1)`.
//!
//! Direct power series up to `z = 0.3` and the `z -> 1 - z` connection
//! formula above `z = 0.96`. In between the direct series is used while its
//! terms do not cancel, and otherwise whichever route is better conditioned.
//! Terminating series (`a` or `b` a nonpositive integer) are summed directly
//! for every `z`.

use std::cmp::Ordering;

use num_complex::Complex;

use super::dd::CDd;
use super::gamma::{gamma, log_gamma, recip_gamma, POLE_TOL};
use crate::error::{Error, Result};
use crate::scalar::{cr, is_finite, Real};

pub const SERIES_EPS: f64 = 1e-16;
pub const MAX_TERMS: usize = 10_000;
/// `c - a - b` closer than this to an integer makes the connection formula degenerate.
pub const LOG_CASE_TOL: f64 = 1e-10;

/// Parameters of 2F1(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp2F1Params<T: Real> {
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub c: Complex<T>,
    pub z: T,
}

impl<T: Real> Hyp2F1Params<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, z: T) -> Result<Self> {
        if nonpositive_integer(c) {
            return Err(Error::Parameter(format!("c = {c} is a nonpositive integer")));
        }
        if !(z >= T::zero() && z < T::one()) {
            return Err(Error::Parameter(format!("z = {z} outside [0, 1)")));
        }
        Ok(Self { a, b, c, z })
    }
}

fn nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    let n = z.re.round();
    n <= T::zero() && (z - cr(n)).norm() < T::lit(POLE_TOL)
}

fn near_integer<T: Real>(z: Complex<T>, tol: T) -> bool {
    (z - cr(z.re.round())).norm() < tol
}

/// Evaluates 2F1 for validated parameters.
pub fn hyp2f1<T: Real>(p: &Hyp2F1Params<T>) -> Result<Complex<T>> {
    let w = T::one() - p.z;
    hyp2f1_split(p.a, p.b, p.c, p.z, w, w.ln())
}

/// 2F1 with `1 - z` and `ln(1 - z)` supplied by the caller, who may know them
/// to full relative accuracy when `z` is within rounding of 1.
pub(crate) fn hyp2f1_split<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: T,
    one_minus_z: T,
    ln_one_minus_z: T,
) -> Result<Complex<T>> {
    // Canonical parameter order makes the result symmetric in (a, b) bit for bit.
    let (a, b) = match (a.re, a.im).partial_cmp(&(b.re, b.im)) {
        Some(Ordering::Greater) => (b, a),
        _ => (a, b),
    };
    if nonpositive_integer(a) || nonpositive_integer(b) || z <= T::lit(DIRECT_ONLY_MAX) {
        return series(a, b, c, z).map(|s| s.sum);
    }
    // Between the two single-route ranges both expansions converge. The direct
    // series is kept while it is well conditioned; otherwise the route with the
    // smaller condition number wins, the connection formula being charged
    // extra for the rounding of its gamma-function coefficients.
    let log_case = near_integer(c - a - b, T::lit(LOG_CASE_TOL));
    if z > T::lit(CONNECTION_ONLY_MIN) {
        return connection(a, b, c, one_minus_z, ln_one_minus_z).map(|s| s.sum);
    }
    let direct = series(a, b, c, z)?;
    if direct.condition() < T::lit(WELL_CONDITIONED) || log_case {
        return Ok(direct.sum);
    }
    let conn = connection(a, b, c, one_minus_z, ln_one_minus_z)?;
    Ok(if conn.condition() * T::lit(CONNECTION_PENALTY) < direct.condition() { conn.sum } else { direct.sum })
}

/// Below this argument only the direct series is used.
const DIRECT_ONLY_MAX: f64 = 0.3;
/// Above this argument only the connection formula is used.
const CONNECTION_ONLY_MIN: f64 = 0.96;
const WELL_CONDITIONED: f64 = 10.0;
/// Typical error of the connection coefficients in units of the series rounding.
const CONNECTION_PENALTY: f64 = 100.0;

/// A sum together with the sum of the magnitudes of its terms.
#[derive(Debug, Clone, Copy)]
struct Summed<T: Real> {
    sum: Complex<T>,
    magnitude: T,
}

impl<T: Real> Summed<T> {
    fn condition(&self) -> T {
        let n = self.sum.norm();
        if n == T::zero() {
            T::infinity()
        } else {
            self.magnitude / n
        }
    }
}

/// The `z -> 1 - z` connection formula.
fn connection<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    w: T,
    ln_w: T,
) -> Result<Summed<T>> {
    let s = c - a - b;
    if near_integer(s, T::lit(LOG_CASE_TOL)) {
        return Err(Error::Parameter(format!(
            "c - a - b = {s} is an integer; the z -> 1 - z connection needs the logarithmic case"
        )));
    }
    let one = cr(T::one());
    let zero = cr(T::zero());
    let first = gamma_quotient(&[c, s], &[c - a, c - b])?;
    let second = gamma_quotient(&[c, -s], &[a, b])? * (s * ln_w).exp();
    let mut out = Summed { sum: zero, magnitude: T::zero() };
    for (coef, a1, b1, c1) in [(first, a, b, one - s), (second, c - a, c - b, one + s)] {
        if coef != zero {
            let part = series(a1, b1, c1, w)?;
            out.sum = out.sum + coef * part.sum;
            out.magnitude = out.magnitude + coef.norm() * part.magnitude;
        }
    }
    if is_finite(out.sum) {
        Ok(out)
    } else {
        Err(Error::NonFinite("hyp2f1"))
    }
}

/// `prod gamma(num) / prod gamma(den)`; zero if a denominator argument is a pole.
fn gamma_quotient<T: Real>(num: &[Complex<T>], den: &[Complex<T>]) -> Result<Complex<T>> {
    if den.iter().any(|&d| nonpositive_integer(d)) {
        return Ok(cr(T::zero()));
    }
    let large = T::lit(20.0);
    if num.iter().chain(den).any(|z| z.norm() > large) {
        let mut log = cr(T::zero());
        for &z in num {
            log = log + log_gamma(z)?;
        }
        for &z in den {
            log = log - log_gamma(z)?;
        }
        return Ok(log.exp());
    }
    let mut value = cr(T::one());
    for &z in num {
        value = value * gamma(z)?;
    }
    for &z in den {
        value = value * recip_gamma(z)?;
    }
    Ok(value)
}

/// Power series; stops after three consecutive terms below
/// `SERIES_EPS * (1 - z) * |sum|`, the factor `1 - z` bounding the geometric
/// tail that is dropped.
fn series<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, z: T) -> Result<Summed<T>> {
    if z > T::lit(COMPENSATED_MIN_Z) {
        compensated_series(a, b, c, z)
    } else {
        plain_series(a, b, c, z)
    }
}

/// Above this argument the series is long enough for the rounding of its
/// term recurrence to matter.
const COMPENSATED_MIN_Z: f64 = 0.5;

/// Tracks the stopping rule shared by both summations.
struct Stop<T: Real> {
    eps: T,
    small_run: u8,
}

impl<T: Real> Stop<T> {
    fn new(z: T) -> Self {
        Self { eps: T::lit(SERIES_EPS) * (T::one() - z), small_run: 0 }
    }

    fn done(&mut self, term: T, sum: T) -> Result<bool> {
        if !sum.is_finite() {
            return Err(Error::NonFinite("hyp2f1 series"));
        }
        if term <= self.eps * sum {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        Ok(self.small_run == 3)
    }
}

fn plain_series<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, z: T) -> Result<Summed<T>> {
    let mut stop = Stop::new(z);
    let mut sum = cr(T::one());
    let mut magnitude = T::one();
    let mut term = sum;
    for n in 0..MAX_TERMS {
        let k = T::from_usize_lossy(n);
        term = term * (a + k) * (b + k) / ((c + k) * (k + T::one())) * z;
        sum = sum + term;
        magnitude = magnitude + term.norm();
        if stop.done(term.norm(), sum.norm())? {
            return Ok(Summed { sum, magnitude });
        }
    }
    Err(Error::NonConvergence { what: "hyp2f1 series", iterations: MAX_TERMS })
}

/// The series with term ratios, terms and partial sums carried in double-word
/// arithmetic, so that the hundreds of terms needed close to `z = 1` do not
/// accumulate the rounding of the recurrence.
fn compensated_series<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, z: T) -> Result<Summed<T>> {
    let mut stop = Stop::new(z);
    let (a, b, c) = (CDd::new(a), CDd::new(b), CDd::new(c));
    let mut sum = CDd::new(cr(T::one()));
    let mut magnitude = T::one();
    let mut term = sum;
    for n in 0..MAX_TERMS {
        let k = T::from_usize_lossy(n);
        let num = a.add_real(k).mul(b.add_real(k)).scale(z);
        let den = c.add_real(k).scale(k + T::one());
        term = term.mul(num.div(den));
        sum = sum.add(term);
        let t = term.value().norm();
        magnitude = magnitude + t;
        if stop.done(t, sum.value().norm())? {
            return Ok(Summed { sum: sum.value(), magnitude });
        }
    }
    Err(Error::NonConvergence { what: "hyp2f1 series", iterations: MAX_TERMS })
}
