//! Gauss–Hermite rule for `int exp(-s^2) f(s) ds`.

use crate::error::{Error, Result};

/// Nodes (ascending) and weights of the `n`-point rule.
///
/// Roots of the orthonormal Hermite polynomial by Newton iteration from the
/// usual asymptotic starting guesses; weights `2 / (H_n')^2` in that normalisation.
pub fn gauss_hermite(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Parameter("Gauss-Hermite rule needs at least one node".into()));
    }
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let nf = n as f64;
    let m = n.div_ceil(2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut z = 0.0f64;

    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        let mut pp = 0.0;
        let mut converged = false;
        for _ in 0..100 {
            let (mut p1, mut p2) = (pim4, 0.0);
            for j in 1..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let step = p1 / pp;
            z -= step;
            if step.abs() <= 1e-15 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence { what: "Gauss-Hermite node", iterations: 100 });
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    nodes.reverse();
    weights.reverse();
    Ok((nodes, weights))
}
