//! Wave-packet estimates of the delta coefficients of a pairing.
//!
//! With a Gaussian window `g` over the second order,
//!
//! ```text
//! V(q) = int dt F^{iq}(x) int dq' g(q') G^{iq'}(+-x)^(*) = A(q) g(q) + B(q) g(-q)
//! ```
//!
//! where `x = tanh t` turns `dx/(1 - x^2)` into `dt`. The inner integral is
//! taken first, by Gauss–Hermite, which makes the `t` integrand decay like
//! `exp(-sigma^2 t^2 / 2)`. `A` is read off at the packet centre; `B` from the
//! mirrored packet, whose value at `-q0` equals the original one at `q0`.

use num_complex::Complex64;

use super::hermite::gauss_hermite;
use super::quadrature::{integrate_t, QuadConfig};
use super::WavePacket;
use crate::conical::{eval, Degree, EvalPoint, Kind, Order};
use crate::error::{Error, Result};
use crate::kernels::{KernelPairSpec, Pairing, Reflection};

/// Gauss–Hermite nodes whose weight is below this fraction of the largest are skipped.
const NODE_CUTOFF: f64 = 1e-30;

/// `Q^{iq'}` is regular at `q' = 0` but its connection-formula evaluation is
/// not; inside this gap it is interpolated linearly from the edges.
const Q_NODE_GAP: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmearEstimate {
    /// Estimated weight of `delta(q - q')` at `q0`.
    pub a: Complex64,
    /// Estimated weight of `delta(q + q')` at `q0`.
    pub b: Complex64,
    /// Quadrature error estimates of the two runs, in the same normalisation.
    pub err_a: f64,
    pub err_b: f64,
}

fn right_value(kind: Kind, d: &Degree<f64>, qp: f64, pt: &EvalPoint<f64>) -> Result<Complex64> {
    if kind == Kind::Q && qp.abs() < Q_NODE_GAP {
        let lo = eval(kind, d, Order::new(-Q_NODE_GAP)?, pt)?;
        let hi = eval(kind, d, Order::new(Q_NODE_GAP)?, pt)?;
        return Ok(lo + (hi - lo) * ((qp + Q_NODE_GAP) / (2.0 * Q_NODE_GAP)));
    }
    eval(kind, d, Order::new(qp)?, pt)
}

/// `V(q0)` for one packet, with `(nodes, weights)` the Gauss–Hermite rule.
fn smeared(
    spec: &KernelPairSpec<f64>,
    q0: f64,
    packet: &WavePacket,
    rule: &(Vec<f64>, Vec<f64>),
    cfg: &QuadConfig,
) -> Result<(Complex64, f64)> {
    let step = std::f64::consts::SQRT_2 * packet.width();
    let w_max = rule.1.iter().copied().fold(0.0, f64::max);
    let nodes: Vec<(f64, f64)> = rule
        .0
        .iter()
        .zip(&rule.1)
        .filter(|(_, &w)| w >= NODE_CUTOFF * w_max)
        .map(|(&s, &w)| (packet.center() + step * s, w))
        .collect();
    let scale = packet.amplitude() * step;
    let left = Order::new(q0)?;
    let d = &spec.degree;

    let v = integrate_t(
        |t| {
            let pt = EvalPoint::from_atanh(t)?;
            let rpt = match spec.reflection {
                Reflection::Same => pt,
                Reflection::Mirrored => pt.reflect(),
            };
            let mut inner = Complex64::default();
            for &(qp, w) in &nodes {
                let g = right_value(spec.right, d, qp, &rpt)?;
                inner += match spec.pairing {
                    Pairing::Conjugated => g.conj(),
                    Pairing::Plain => g,
                } * w;
            }
            Ok(eval(spec.left, d, left, &pt)? * inner * scale)
        },
        -cfg.t_max,
        cfg.t_max,
        cfg,
    )?;
    Ok((v.value, v.err_est))
}

/// `(A(q0), B(q0))` of the pairing `spec`, scaled by the packet amplitude.
///
/// The packet must be centred within three widths of `q0`.
pub fn smear_estimate(
    spec: &KernelPairSpec<f64>,
    q0: f64,
    packet: &WavePacket,
    cfg: &QuadConfig,
) -> Result<SmearEstimate> {
    cfg.validate()?;
    if !((q0 - packet.center()).abs() <= 3.0 * packet.width()) {
        return Err(Error::Parameter(format!(
            "q0 = {q0} lies more than three widths from the packet centre {}",
            packet.center()
        )));
    }
    // Re-validates the overlap invariant for packets built by hand.
    WavePacket::with_amplitude(packet.center(), packet.width(), packet.amplitude())?;

    let rule = gauss_hermite(cfg.q_nodes)?;
    let norm = packet.shape(q0);
    let (va, ea) = smeared(spec, q0, packet, &rule, cfg)?;
    let (vb, eb) = smeared(spec, q0, &packet.mirrored(), &rule, cfg)?;
    Ok(SmearEstimate { a: va / norm, b: vb / norm, err_a: ea / norm, err_b: eb / norm })
}
