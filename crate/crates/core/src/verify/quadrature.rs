//! Adaptive Gauss–Kronrod (7/15) quadrature for complex integrands, and the
//! `x = tanh t` substitution that maps (-1, 1) onto the real line.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kronrod abscissae on [0, 1], largest first; odd indices are the Gauss points.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Gauss weights for the points `XGK[1], XGK[3], XGK[5]` and the centre.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Width of the panels the interval is cut into before any refinement.
const INITIAL_PANEL: f64 = 1.0;

/// Relative accuracy of the integrands met in practice. Special-function
/// values carry errors near 1e-14, so an integral that cancels to zero cannot
/// be resolved below this fraction of `int |f|`.
pub const NOISE_FLOOR: f64 = 1e-13;

/// Integration settings shared by every quadrature in the verification engine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Cutoff of the `t = atanh x` range.
    pub t_max: f64,
    /// Bisections allowed beyond the initial panels.
    pub max_refinements: usize,
    /// Gauss–Hermite nodes for the inner wave-packet integral.
    pub q_nodes: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-13, t_max: 20.0, max_refinements: 2000, q_nodes: 64 }
    }
}

impl QuadConfig {
    /// Settings for smearing with a packet of width `sigma`: `t_max = 8 / sigma`.
    pub fn for_packet(sigma: f64) -> Self {
        Self { rel_tol: 1e-8, abs_tol: 1e-12, t_max: 8.0 / sigma, max_refinements: 4000, q_nodes: 64 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol >= 1e-13) {
            return Err(Error::Parameter(format!("rel_tol must be at least 1e-13, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::Parameter(format!("abs_tol must be non-negative, got {}", self.abs_tol)));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(Error::Parameter(format!("t_max must be positive, got {}", self.t_max)));
        }
        if self.q_nodes < 16 {
            return Err(Error::Parameter(format!("q_nodes must be at least 16, got {}", self.q_nodes)));
        }
        Ok(())
    }
}

/// Value and error estimate of a converged integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub err_est: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    res_abs: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err;
    if res_asc != 0.0 && scaled != 0.0 {
        scaled = res_asc * (200.0 * scaled / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn kronrod15<F>(f: &mut F, a: f64, b: f64) -> Result<Segment>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center)?;
    let mut res_k = f_center * WGK[7];
    let mut res_g = f_center * WG[3];
    let mut res_abs = WGK[7] * f_center.norm();
    let mut values = [(Complex64::default(), Complex64::default()); 7];

    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let (lo, hi) = (f(center - dx)?, f(center + dx)?);
        *slot = (lo, hi);
        res_k += (lo + hi) * WGK[j];
        if j % 2 == 1 {
            res_g += (lo + hi) * WG[j / 2];
        }
        res_abs += WGK[j] * (lo.norm() + hi.norm());
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for (j, (lo, hi)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((lo - mean).norm() + (hi - mean).norm());
    }

    let scale = half.abs();
    let err = ((res_k - res_g) * half).norm();
    Ok(Segment {
        a,
        b,
        value: res_k * half,
        err: rescale_error(err, res_abs * scale, res_asc * scale),
        res_abs: res_abs * scale,
    })
}

/// `int_a^b f(t) dt` by globally adaptive bisection of the worst panel.
///
/// Stops once the summed error estimate is below `rel_tol |value| + abs_tol`,
/// or below `NOISE_FLOOR * int |f|` when that is larger.
pub fn integrate_t<F>(mut f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<Integral>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Parameter(format!("integration limits must be finite, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(Integral { value: Complex64::default(), err_est: 0.0, evaluations: 0 });
    }
    let panels = ((b - a).abs() / INITIAL_PANEL).ceil().max(1.0) as usize;
    let width = (b - a) / panels as f64;
    let mut heap = BinaryHeap::with_capacity(panels + cfg.max_refinements);
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { a + width * (i + 1) as f64 };
        heap.push(kronrod15(&mut f, lo, hi)?);
    }

    let mut refinements = 0;
    loop {
        let (value, err, res_abs) = heap.iter().fold((Complex64::default(), 0.0, 0.0), |acc, s| {
            (acc.0 + s.value, acc.1 + s.err, acc.2 + s.res_abs)
        });
        let target = cfg.rel_tol * value.norm() + cfg.abs_tol;
        let floor = NOISE_FLOOR * res_abs;
        if err <= target.max(floor) {
            let evaluations = 15 * (panels + 2 * refinements);
            return Ok(Integral { value, err_est: err, evaluations });
        }
        if refinements >= cfg.max_refinements {
            return Err(Error::Quadrature { refinements, estimate: err, target });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            return Err(Error::Quadrature { refinements, estimate: err, target });
        }
        heap.push(kronrod15(&mut f, worst.a, mid)?);
        heap.push(kronrod15(&mut f, mid, worst.b)?);
        refinements += 1;
    }
}

/// `int_{-1}^{1} f(x) dx` as `int f(tanh t) sech^2 t dt` over `|t| <= t_max`.
pub fn integrate<F>(mut f: F, cfg: &QuadConfig) -> Result<Integral>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    cfg.validate()?;
    integrate_t(
        |t| {
            let sech = 1.0 / t.cosh();
            Ok(f(t.tanh())? * (sech * sech))
        },
        -cfg.t_max,
        cfg.t_max,
        cfg,
    )
}
