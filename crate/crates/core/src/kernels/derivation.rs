//! Coefficient algebra: the operations that carry one relation into the next.
//!
//! Starting from I1, the connection formula (conjugated, so with the gamma
//! ratio at `lambda^*`) gives I2 and I3, the reflection formula gives J1, and
//! the connection formula again gives J2 and J3.

use std::sync::Arc;

use num_complex::Complex;

use super::closed_form::{kernel, kernel_i1, kernel_i2, kernel_j1, kernel_j2};
use super::{check_q, Coefficient, DeltaKernel, KernelName};
use crate::error::Result;
use crate::scalar::{c, cr, Real};
use crate::special::gamma_ratio;

/// `K^{q,-q'}`: since `delta(q - (-q')) = delta(q + q')` the two slots swap.
pub fn kernel_mirror<T: Real>(k: &DeltaKernel<T>) -> DeltaKernel<T> {
    DeltaKernel::from_parts(format!("mirror({})", k.label()), k.b_fn(), k.a_fn())
}

/// `K^{-q,q'}`: `A'(q) = B(-q)`, `B'(q) = A(-q)`.
pub fn kernel_negate_order<T: Real>(k: &DeltaKernel<T>) -> DeltaKernel<T> {
    let (a, b) = (k.a_fn(), k.b_fn());
    DeltaKernel::new(format!("negate({})", k.label()), move |q: T| b(-q), move |q: T| a(-q))
}

/// `f1(q') K1 + f2(q') K2` for multipliers depending on the second order `q'`:
///
/// ```text
/// A(q) = f1(q) A1(q) + f2(q) A2(q),    B(q) = f1(-q) B1(q) + f2(-q) B2(q).
/// ```
pub fn kernel_combine<T, F1, F2>(k1: &DeltaKernel<T>, k2: &DeltaKernel<T>, f1: F1, f2: F2) -> DeltaKernel<T>
where
    T: Real,
    F1: Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
    F2: Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
{
    let (f1, f2): (Coefficient<T>, Coefficient<T>) = (Arc::new(f1), Arc::new(f2));
    let (a1, b1, a2, b2) = (k1.a_fn(), k1.b_fn(), k2.a_fn(), k2.b_fn());
    let (g1, g2) = (Arc::clone(&f1), Arc::clone(&f2));
    DeltaKernel::new(
        format!("combine({}, {})", k1.label(), k2.label()),
        move |q| Ok(f1(q)? * a1(q)? + f2(q)? * a2(q)?),
        move |q| Ok(g1(-q)? * b1(q)? + g2(-q)? * b2(q)?),
    )
}

/// `g1(q) K1 + g2(q) K2` for multipliers depending on the first order `q`,
/// which act on both slots alike.
pub fn kernel_combine_in_q<T, G1, G2>(k1: &DeltaKernel<T>, k2: &DeltaKernel<T>, g1: G1, g2: G2) -> DeltaKernel<T>
where
    T: Real,
    G1: Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
    G2: Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
{
    let (g1, g2): (Coefficient<T>, Coefficient<T>) = (Arc::new(g1), Arc::new(g2));
    let (a1, b1, a2, b2) = (k1.a_fn(), k1.b_fn(), k2.a_fn(), k2.b_fn());
    let (h1, h2) = (Arc::clone(&g1), Arc::clone(&g2));
    DeltaKernel::new(
        format!("combine_q({}, {})", k1.label(), k2.label()),
        move |q| Ok(g1(q)? * a1(q)? + g2(q)? * a2(q)?),
        move |q| Ok(h1(q)? * b1(q)? + h2(q)? * b2(q)?),
    )
}

/// `(cosh pi q, sinh pi q)`, refusing the pole of `1/sinh` at `q = 0`.
fn cosh_sinh<T: Real>(q: T) -> Result<(T, T)> {
    check_q(q)?;
    let x = T::PI() * q;
    Ok((x.cosh(), x.sinh()))
}

fn i_pi<T: Real>() -> Complex<T> {
    c(T::zero(), T::PI())
}

/// Applied to every multiplier and input coefficient. The identity gives the
/// reconstruction itself; the modulus gives the size of the terms it sums,
/// the scale on which a slot that should cancel to zero is judged.
#[derive(Clone, Copy)]
enum Lift {
    Identity,
    Modulus,
}

impl Lift {
    fn apply<T: Real>(self, z: Complex<T>) -> Complex<T> {
        match self {
            Lift::Identity => z,
            Lift::Modulus => cr(z.norm()),
        }
    }

    fn kernel<T: Real>(self, k: DeltaKernel<T>) -> DeltaKernel<T> {
        match self {
            Lift::Identity => k,
            Lift::Modulus => {
                let (a, b) = (k.a_fn(), k.b_fn());
                DeltaKernel::new(
                    format!("|{}|", k.label()),
                    move |q: T| Ok(cr(a(q)?.norm())),
                    move |q: T| Ok(cr(b(q)?.norm())),
                )
            }
        }
    }
}

/// From `conj(Q^{iq'}) = i pi / (2 sinh pi q') [cosh(pi q') P^{-iq'} - Gamma(1/2-i nu-i q')/Gamma(1/2-i nu+i q') P^{iq'}]`:
/// `K' = i pi/(2 sinh pi q') [cosh(pi q') K - ratio(q') K^{q,-q'}]`.
fn conjugated_connection<T: Real>(nu: T, k: &DeltaKernel<T>, lift: Lift) -> DeltaKernel<T> {
    let half = T::lit(0.5);
    kernel_combine(
        k,
        &kernel_mirror(k),
        move |qp: T| {
            let (ch, sh) = cosh_sinh(qp)?;
            Ok(lift.apply(i_pi::<T>() * ch / (sh * T::lit(2.0))))
        },
        move |qp: T| {
            let (_, sh) = cosh_sinh(qp)?;
            let ratio = gamma_ratio(c(half, -nu - qp), c(half, -nu + qp))?;
            Ok(lift.apply(-i_pi::<T>() * ratio / (sh * T::lit(2.0))))
        },
    )
}

/// From `Q^{iq} = i pi/(2 sinh pi q) [Gamma(1/2+i nu+i q)/Gamma(1/2+i nu-i q) P^{-iq} - cosh(pi q) P^{iq}]`:
/// `K' = i pi/(2 sinh pi q) [ratio(q) K^{-q,q'} - cosh(pi q) K]`.
fn left_connection<T: Real>(nu: T, k: &DeltaKernel<T>, lift: Lift) -> DeltaKernel<T> {
    let half = T::lit(0.5);
    kernel_combine_in_q(
        &kernel_negate_order(k),
        k,
        move |q: T| {
            let (_, sh) = cosh_sinh(q)?;
            let ratio = gamma_ratio(c(half, nu + q), c(half, nu - q))?;
            Ok(lift.apply(i_pi::<T>() * ratio / (sh * T::lit(2.0))))
        },
        move |q: T| {
            let (ch, sh) = cosh_sinh(q)?;
            Ok(lift.apply(-i_pi::<T>() * ch / (sh * T::lit(2.0))))
        },
    )
}

/// `J1 = -i sinh(pi(nu + q')) I1 + (2/pi) cosh(pi(nu + q')) I2`.
fn reflection<T: Real>(nu: T, lift: Lift) -> DeltaKernel<T> {
    kernel_combine(
        &lift.kernel(kernel_i1(nu)),
        &lift.kernel(kernel_i2(nu)),
        move |qp: T| Ok(lift.apply(c(T::zero(), -(T::PI() * (nu + qp)).sinh()))),
        move |qp: T| Ok(lift.apply(cr(T::lit(2.0) / T::PI() * (T::PI() * (nu + qp)).cosh()))),
    )
}

fn derive_lifted<T: Real>(name: KernelName, nu: T, lift: Lift) -> Option<DeltaKernel<T>> {
    Some(match name {
        KernelName::I1 => return None,
        KernelName::I2 => conjugated_connection(nu, &lift.kernel(kernel_i1(nu)), lift),
        KernelName::I3 => left_connection(nu, &lift.kernel(kernel_i2(nu)), lift),
        KernelName::J1 => reflection(nu, lift),
        KernelName::J2 => conjugated_connection(nu, &lift.kernel(kernel_j1(nu)), lift),
        KernelName::J3 => left_connection(nu, &lift.kernel(kernel_j2(nu)), lift),
    })
}

/// I2 from I1 through the connection formula in the second factor.
pub fn derive_i2<T: Real>(nu: T) -> DeltaKernel<T> {
    conjugated_connection(nu, &kernel_i1(nu), Lift::Identity)
}

/// I3 from I2 through the connection formula in the first factor.
pub fn derive_i3<T: Real>(nu: T) -> DeltaKernel<T> {
    left_connection(nu, &kernel_i2(nu), Lift::Identity)
}

/// J1 from I1 and I2 through the reflection formula.
pub fn derive_j1<T: Real>(nu: T) -> DeltaKernel<T> {
    reflection(nu, Lift::Identity)
}

/// J2 from J1, as I2 from I1.
pub fn derive_j2<T: Real>(nu: T) -> DeltaKernel<T> {
    conjugated_connection(nu, &kernel_j1(nu), Lift::Identity)
}

/// J3 from J2, as I3 from I2.
pub fn derive_j3<T: Real>(nu: T) -> DeltaKernel<T> {
    left_connection(nu, &kernel_j2(nu), Lift::Identity)
}

/// Reconstruction of a kernel from its predecessor; `None` for I1, the root.
pub fn derive<T: Real>(name: KernelName, nu: T) -> Option<DeltaKernel<T>> {
    derive_lifted(name, nu, Lift::Identity)
}

/// Per-slot relative deviation between the closed form and its reconstruction at `q`.
///
/// A slot is measured against the closed-form value; a slot whose closed form
/// is exactly zero (the `A` of J1 and J3) is measured against the summed
/// magnitude of the terms that cancel in the reconstruction. `None` for I1.
pub fn closure_deviation<T: Real>(name: KernelName, nu: T, q: T) -> Result<Option<(T, T)>> {
    let (Some(derived), Some(terms)) = (derive(name, nu), derive_lifted(name, nu, Lift::Modulus)) else {
        return Ok(None);
    };
    let (a, b) = kernel(name, nu).eval(q)?;
    let (da, db) = derived.eval(q)?;
    let (ta, tb) = terms.eval(q)?;
    let slot = |closed: Complex<T>, rebuilt: Complex<T>, size: Complex<T>| {
        let reference = if closed.norm() > T::zero() { closed.norm() } else { size.norm() };
        (closed - rebuilt).norm() / reference.max(T::min_positive_value())
    };
    Ok(Some((slot(a, da, ta), slot(b, db, tb))))
}
