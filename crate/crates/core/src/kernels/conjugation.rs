//! Coefficient-level conjugation conditions.
//!
//! For the Hermitian relations `(K^{q,q'})^* = K^{q',q}` reads `A(q)` real and
//! `conj B(q) = B(-q)`. For I2 and J2 the definitions give
//! `(K^{q,q'})^* = K^{-q,-q'}`, i.e. `conj A(q) = A(-q)` and `conj B(q) = B(-q)`.
//! The further claims `(I2^{q,q'})^* = -I2^{q',q}` and `(J2^{q,q'})^* = J2^{q',q}`
//! are evaluated as well. Outcomes are reported, never asserted.
//!
//! The I2/J2 conditions assume `conj Q_lambda^{iq} = Q_lambda^{-iq}`, which
//! holds at `nu = 0`; for other conical degrees the closed forms do not
//! satisfy them and the report says so.

use num_complex::Complex;

use super::{kernel, DeltaKernel, KernelName};
use crate::error::Result;
use crate::scalar::Real;

/// Relative deviation below which a condition counts as holding.
pub const CONJUGATION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    /// Follows from the definition of the integral.
    Definitional,
    /// A further claim about the closed forms.
    DerivedClaim,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionCheck<T: Real> {
    pub statement: &'static str,
    pub kind: ConditionKind,
    /// Largest deviation on the grid, relative to the largest coefficient magnitude.
    pub max_deviation: T,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjugationReport<T: Real> {
    pub kernel: KernelName,
    pub nu: T,
    pub conditions: Vec<ConditionCheck<T>>,
}

type Sample<T> = (Complex<T>, Complex<T>, Complex<T>, Complex<T>);

/// `(A(q), B(q), A(-q), B(-q))` on each grid point.
fn sample<T: Real>(k: &DeltaKernel<T>, grid: &[T]) -> Result<Vec<Sample<T>>> {
    grid.iter().map(|&q| Ok((k.a(q)?, k.b(q)?, k.a(-q)?, k.b(-q)?))).collect()
}

pub fn check_conjugation<T: Real>(name: KernelName, nu: T, q_grid: &[T]) -> Result<ConjugationReport<T>> {
    let samples = sample(&kernel(name, nu), q_grid)?;
    let scale = samples
        .iter()
        .flat_map(|s| [s.0.norm(), s.1.norm()])
        .fold(T::min_positive_value(), T::max);

    let measure = |f: &dyn Fn(&Sample<T>) -> T| samples.iter().map(f).fold(T::zero(), T::max) / scale;
    let check = |statement, kind, f: &dyn Fn(&Sample<T>) -> T| {
        let max_deviation = measure(f);
        ConditionCheck { statement, kind, max_deviation, holds: max_deviation <= T::lit(CONJUGATION_TOL) }
    };

    use ConditionKind::*;
    let mut conditions = Vec::new();
    match name {
        KernelName::I1 | KernelName::I3 | KernelName::J1 | KernelName::J3 => {
            conditions.push(check("A(q) real", Definitional, &|s| s.0.im.abs()));
            conditions.push(check("conj B(q) = B(-q)", Definitional, &|s| (s.1.conj() - s.3).norm()));
        }
        KernelName::I2 | KernelName::J2 => {
            conditions.push(check("conj A(q) = A(-q)", Definitional, &|s| (s.0.conj() - s.2).norm()));
            conditions.push(check("conj B(q) = B(-q)", Definitional, &|s| (s.1.conj() - s.3).norm()));
        }
    }
    match name {
        KernelName::I2 => {
            conditions.push(check("conj A(q) = -A(q)", DerivedClaim, &|s| (s.0.conj() + s.0).norm()));
            conditions.push(check("conj B(q) = -B(-q)", DerivedClaim, &|s| (s.1.conj() + s.3).norm()));
        }
        KernelName::J2 => {
            conditions.push(check("conj A(q) = A(q)", DerivedClaim, &|s| (s.0.conj() - s.0).norm()));
            conditions.push(check("conj B(q) = B(-q)", DerivedClaim, &|s| (s.1.conj() - s.3).norm()));
        }
        _ => {}
    }
    Ok(ConjugationReport { kernel: name, nu, conditions })
}
