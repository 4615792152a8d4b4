//! Closed-form coefficients of the six conical relations, `lambda = -1/2 + i nu`.
//!
//! All `B` coefficients share the factor `1 / (Gamma(1/2 - i nu - i q) Gamma(1/2 + i nu - i q))`.

use num_complex::Complex;

use super::{DeltaKernel, KernelName};
use crate::conical::Degree;
use crate::error::Result;
use crate::scalar::{c, cr, Real};
use crate::special::{gamma, log_gamma, recip_gamma, sin_pi};

/// Above this `|q|` or `|nu|` the gamma products go through `log_gamma`.
const LOG_ROUTE: f64 = 8.0;

/// `1 / (Gamma(1/2 - i nu - i q) Gamma(1/2 + i nu - i q))`.
fn inv_gamma_pair<T: Real>(nu: T, q: T) -> Result<Complex<T>> {
    let half = T::lit(0.5);
    let u = c(half, -nu - q);
    let v = c(half, nu - q);
    if q.abs() > T::lit(LOG_ROUTE) || nu.abs() > T::lit(LOG_ROUTE) {
        Ok((-(log_gamma(u)? + log_gamma(v)?)).exp())
    } else {
        Ok(recip_gamma(u)? * recip_gamma(v)?)
    }
}

fn pi<T: Real>() -> T {
    T::PI()
}

fn i_unit<T: Real>() -> Complex<T> {
    c(T::zero(), T::one())
}

/// `(cosh 2 pi q + cosh 2 pi nu) / (q sinh pi q)`.
fn cosh_sum_ratio<T: Real>(nu: T, q: T) -> T {
    let two_pi = T::lit(2.0) * pi::<T>();
    ((two_pi * q).cosh() + (two_pi * nu).cosh()) / (q * (pi::<T>() * q).sinh())
}

/// `A = (cosh 2 pi q + cosh 2 pi nu)/(q sinh pi q)`,
/// `B = 2 pi cosh(pi nu) / (q sinh(pi q) Gamma(1/2 - i nu - i q) Gamma(1/2 + i nu - i q))`.
pub fn kernel_i1<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new(
        "I1",
        move |q| Ok(cr(cosh_sum_ratio(nu, q))),
        move |q| {
            let k = T::lit(2.0) * pi::<T>() * (pi::<T>() * nu).cosh() / (q * (pi::<T>() * q).sinh());
            Ok(inv_gamma_pair(nu, q)? * k)
        },
    )
}

/// `A = i pi (sinh 2 pi q + sinh 2 pi nu)/(2 q sinh pi q)`,
/// `B = i pi^2 sinh(pi nu) / (q sinh(pi q) Gamma Gamma)`.
pub fn kernel_i2<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new(
        "I2",
        move |q| {
            let two_pi = T::lit(2.0) * pi::<T>();
            let r = ((two_pi * q).sinh() + (two_pi * nu).sinh()) / (T::lit(2.0) * q * (pi::<T>() * q).sinh());
            Ok(c(T::zero(), pi::<T>() * r))
        },
        move |q| {
            let k = pi::<T>() * pi::<T>() * (pi::<T>() * nu).sinh() / (q * (pi::<T>() * q).sinh());
            Ok(inv_gamma_pair(nu, q)? * i_unit::<T>() * k)
        },
    )
}

/// `A = pi^2 (cosh 2 pi q + cosh 2 pi nu)/(4 q sinh pi q)`,
/// `B = pi^3 cosh(pi nu) / (2 q sinh(pi q) Gamma Gamma)`; i.e. `(pi^2/4)` times I1.
pub fn kernel_i3<T: Real>(nu: T) -> DeltaKernel<T> {
    let quarter_pi2 = pi::<T>() * pi::<T>() / T::lit(4.0);
    DeltaKernel::new(
        "I3",
        move |q| Ok(cr(quarter_pi2 * cosh_sum_ratio(nu, q))),
        move |q| {
            let k = pi::<T>().powi(3) * (pi::<T>() * nu).cosh()
                / (T::lit(2.0) * q * (pi::<T>() * q).sinh());
            Ok(inv_gamma_pair(nu, q)? * k)
        },
    )
}

/// `A = 0`, `B = 2 pi i / (q Gamma Gamma)`.
pub fn kernel_j1<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new(
        "J1",
        |_| Ok(cr(T::zero())),
        move |q| Ok(inv_gamma_pair(nu, q)? * c(T::zero(), T::lit(2.0) * pi::<T>() / q)),
    )
}

/// `A = pi cosh(pi (q - nu)) / (q sinh pi q)`, `B = pi^2 / (q tanh(pi q) Gamma Gamma)`.
///
/// The factor `pi` in `A` is what the mirrored connection relation produces
/// from J1 (see [`super::derive_j2`]) and what the smearing estimator measures;
/// [`kernel_j2_published`] keeps the expression without it.
pub fn kernel_j2<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new(
        "J2",
        move |q| Ok(cr(pi::<T>() * j2_published_a(nu, q))),
        move |q| j2_b(nu, q),
    )
}

/// J2 with `A = cosh(pi (q - nu)) / (q sinh pi q)`, as it is usually quoted.
pub fn kernel_j2_published<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new("J2(published)", move |q| Ok(cr(j2_published_a(nu, q))), move |q| j2_b(nu, q))
}

fn j2_published_a<T: Real>(nu: T, q: T) -> T {
    (pi::<T>() * (q - nu)).cosh() / (q * (pi::<T>() * q).sinh())
}

fn j2_b<T: Real>(nu: T, q: T) -> Result<Complex<T>> {
    let k = pi::<T>() * pi::<T>() / (q * (pi::<T>() * q).tanh());
    Ok(inv_gamma_pair(nu, q)? * k)
}

/// `A = 0`, `B = -i pi^3 / (2 q Gamma Gamma)`.
pub fn kernel_j3<T: Real>(nu: T) -> DeltaKernel<T> {
    DeltaKernel::new(
        "J3",
        |_| Ok(cr(T::zero())),
        move |q| {
            let k = -pi::<T>().powi(3) / (T::lit(2.0) * q);
            Ok(inv_gamma_pair(nu, q)? * c(T::zero(), k))
        },
    )
}

/// Closed form by name.
pub fn kernel<T: Real>(name: KernelName, nu: T) -> DeltaKernel<T> {
    match name {
        KernelName::I1 => kernel_i1(nu),
        KernelName::I2 => kernel_i2(nu),
        KernelName::I3 => kernel_i3(nu),
        KernelName::J1 => kernel_j1(nu),
        KernelName::J2 => kernel_j2(nu),
        KernelName::J3 => kernel_j3(nu),
    }
}

/// `delta(q - q')` coefficient of the plain pairing `int P^{iq} P^{iq'} dx/(1 - x^2)`
/// for general complex degree:
///
/// ```text
/// -2 Gamma(iq) Gamma(-iq) sin(pi lambda) / (Gamma(1 + lambda - iq) Gamma(-lambda - iq))
/// ```
pub fn bielski_diag_coefficient<T: Real>(degree: &Degree<T>, q: T) -> Result<Complex<T>> {
    super::check_q(q)?;
    let lambda = degree.lambda();
    let iq = c(T::zero(), q);
    let one = cr(T::one());
    let numerator = gamma(iq)? * gamma(-iq)? * sin_pi(lambda) * T::lit(-2.0);
    Ok(numerator * recip_gamma(one + lambda - iq)? * recip_gamma(-lambda - iq)?)
}

/// The bracketed expression that accompanies the diagonal coefficient for
/// general degree; numerically it is the `delta(q + q')` coefficient of the
/// same plain pairing.
///
/// ```text
/// pi / (Gamma(1 - iq) Gamma(1 + iq)) + sin^2(pi lambda) Gamma(iq) Gamma(-iq) / pi
///   + pi Gamma(iq) Gamma(-iq) / (Gamma(1 + lambda - iq) Gamma(-lambda - iq) Gamma(1 + lambda + iq) Gamma(-lambda + iq))
/// ```
pub fn bielski_bracket<T: Real>(degree: &Degree<T>, q: T) -> Result<Complex<T>> {
    super::check_q(q)?;
    let lambda = degree.lambda();
    let iq = c(T::zero(), q);
    let one = cr(T::one());
    let pi = pi::<T>();
    let gg = gamma(iq)? * gamma(-iq)?;
    let s = sin_pi(lambda);
    let first = recip_gamma(one - iq)? * recip_gamma(one + iq)? * pi;
    let second = s * s * gg / pi;
    let third = gg
        * pi
        * recip_gamma(one + lambda - iq)?
        * recip_gamma(-lambda - iq)?
        * recip_gamma(one + lambda + iq)?
        * recip_gamma(-lambda + iq)?;
    Ok(first + second + third)
}
