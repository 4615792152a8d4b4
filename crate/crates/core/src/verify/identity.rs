//! The exact identity behind the delta relations, on a truncated interval.
//!
//! For `y1 = P^{iq}`, `y2 = P^{iq'}` the Legendre equation gives
//!
//! ```text
//! int_a^b y1 y2 dx/(1 - x^2) = [(1 - x^2)(y1 y2' - y2 y1')]_a^b / (q^2 - q'^2)
//! ```
//!
//! for every `-1 < a <= b < 1`. The left side is integrated in `t = atanh x`,
//! the right side uses only evaluator values and derivatives.

use num_complex::Complex64;

use super::quadrature::{integrate_t, QuadConfig};
use super::VerificationReport;
use crate::conical::{eval, eval_jet, Degree, EvalPoint, Kind, Order};
use crate::error::{Error, Result};

pub const IDENTITY_TOL: f64 = 1e-7;

const MIN_GAP: f64 = 1e-6;

const QUAD: QuadConfig = QuadConfig { rel_tol: 1e-12, abs_tol: 1e-15, t_max: 20.0, max_refinements: 4000, q_nodes: 64 };

fn bracket(d: &Degree<f64>, q: Order<f64>, qp: Order<f64>, x: f64) -> Result<Complex64> {
    let pt = EvalPoint::new(x)?;
    let y1 = eval_jet(Kind::P, d, q, &pt)?;
    let y2 = eval_jet(Kind::P, d, qp, &pt)?;
    Ok((y1.value * y2.d1 - y2.value * y1.d1) * pt.one_minus_x2())
}

pub fn truncated_identity(d: &Degree<f64>, q: f64, qp: f64, a: f64, b: f64) -> Result<VerificationReport> {
    let gap = (q * q - qp * qp).abs();
    if !(gap >= MIN_GAP) {
        return Err(Error::DegeneratePair(gap));
    }
    if !(a <= b) {
        return Err(Error::Domain(format!("limits must satisfy a <= b, got a = {a}, b = {b}")));
    }
    let (oq, oqp) = (Order::new(q)?, Order::new(qp)?);
    let (pa, pb) = (EvalPoint::new(a)?, EvalPoint::new(b)?);

    let rhs = (bracket(d, oq, oqp, b)? - bracket(d, oq, oqp, a)?) / (q * q - qp * qp);
    let lhs = integrate_t(
        |t| {
            let pt = EvalPoint::from_atanh(t)?;
            Ok(eval(Kind::P, d, oq, &pt)? * eval(Kind::P, d, oqp, &pt)?)
        },
        pa.atanh(),
        pb.atanh(),
        &QUAD,
    )?;

    let id = format!("identity.lambda={}.q={q}.qp={qp}.a={a}.b={b}", d.lambda());
    let report = if a == b {
        VerificationReport::against(id, rhs, lhs.value, IDENTITY_TOL, 1.0)
    } else {
        VerificationReport::relative(id, rhs, lhs.value, IDENTITY_TOL)
    };
    Ok(report.with_detail(format!("quadrature error estimate {:e}", lhs.err_est)))
}
