//! The full verification run: every configured claim, evaluated in parallel
//! and returned in id order.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::audit::{
    audit_q_degree_conjugation, bielski_audit, conjugation_reports, j2_published_audit, kernel_comparison,
};
use super::classical::{classical_orthogonality_check, kalmykov_hutasoit_audit};
use super::identity::{truncated_identity, IDENTITY_TOL};
use super::quadrature::QuadConfig;
use super::smear::smear_estimate;
use super::{VerificationReport, WavePacket};
use crate::conical::Degree;
use crate::error::Result;
use crate::kernels::KernelName;

/// Pass thresholds for the three tiers of claims.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Exact identities on a truncated interval (relative).
    pub identity: f64,
    /// Smeared delta coefficients (relative, or relative to the partner slot).
    pub delta: f64,
    /// Classical integer-order integrals.
    pub classical: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { identity: IDENTITY_TOL, delta: 1e-2, classical: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub nus: Vec<f64>,
    pub q0s: Vec<f64>,
    /// Packet width.
    pub sigma: f64,
    pub quad: QuadConfig,
    pub tolerances: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            nus: vec![0.0],
            q0s: vec![1.0, 2.0, 3.0],
            sigma: 0.1,
            quad: QuadConfig::for_packet(0.1),
            tolerances: Tolerances::default(),
        }
    }
}

pub const CONJUGATION_GRID: [f64; 8] = [-3.7, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.7];
pub const AUDIT_X_GRID: [f64; 7] = [-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9];
const CLASSICAL_CASES: [(u32, u32, u32); 8] =
    [(2, 1, 1), (3, 2, 2), (3, 1, 3), (4, 1, 1), (4, 2, 4), (5, 3, 3), (6, 4, 4), (6, 2, 5)];
const BIELSKI_LAMBDA: f64 = 0.3;

#[derive(Debug, Clone, Copy)]
enum Task {
    Identity { nu: f64, q0: f64 },
    Kernel { name: KernelName, nu: f64, q0: f64 },
    QAudit { nu: f64, q0: f64 },
    Conjugation { name: KernelName, nu: f64 },
    Classical { l: u32, m: u32, n: u32 },
    Kalmykov { l: u32, q0: f64 },
    Bielski { q0: f64 },
}

impl Task {
    fn id(&self) -> String {
        match self {
            Task::Identity { nu, q0 } => format!("identity.nu={nu}.q0={q0}"),
            Task::Kernel { name, nu, q0 } => format!("delta.{name}.nu={nu}.q0={q0}"),
            Task::QAudit { nu, q0 } => format!("audit.q.nu={nu}.q={q0}"),
            Task::Conjugation { name, nu } => format!("conjugation.{name}.nu={nu}"),
            Task::Classical { l, m, n } => format!("classical.l={l}.m={m}.n={n}"),
            Task::Kalmykov { l, q0 } => format!("audit.kalmykov.l={l}.q0={q0}"),
            Task::Bielski { q0 } => format!("audit.bielski.q0={q0}"),
        }
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
        let tol = &cfg.tolerances;
        let packet = |q0: f64| WavePacket::new(q0, cfg.sigma);
        match *self {
            Task::Identity { nu, q0 } => {
                let r = truncated_identity(&Degree::conical(nu), q0, q0 + 0.6, -0.95, 0.9)?;
                Ok(vec![r.rejudged(tol.identity)])
            }
            Task::Kernel { name, nu, q0 } => {
                let est = smear_estimate(&name.pair_spec(nu), q0, &packet(q0)?, &cfg.quad)?;
                let mut out = kernel_comparison(name, nu, q0, &est, tol.delta)?;
                if name == KernelName::J2 {
                    out.push(j2_published_audit(nu, q0, &est)?);
                }
                Ok(out)
            }
            Task::QAudit { nu, q0 } => audit_q_degree_conjugation(nu, q0, &AUDIT_X_GRID),
            Task::Conjugation { name, nu } => conjugation_reports(name, nu, &CONJUGATION_GRID),
            Task::Classical { l, m, n } => Ok(vec![classical_orthogonality_check(l, m, n)?.rejudged(tol.classical)]),
            Task::Kalmykov { l, q0 } => Ok(vec![kalmykov_hutasoit_audit(l, q0, &packet(q0)?, &cfg.quad)?]),
            Task::Bielski { q0 } => bielski_audit(Complex64::new(BIELSKI_LAMBDA, 0.0), q0, &packet(q0)?, &cfg.quad),
        }
    }
}

fn tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    if cfg.nus.is_empty() && cfg.q0s.is_empty() {
        return out;
    }
    for &nu in &cfg.nus {
        for &q0 in &cfg.q0s {
            out.push(Task::Identity { nu, q0 });
            out.push(Task::QAudit { nu, q0 });
            out.extend(KernelName::ALL.iter().map(|&name| Task::Kernel { name, nu, q0 }));
        }
        out.extend(KernelName::ALL.iter().map(|&name| Task::Conjugation { name, nu }));
    }
    for &q0 in &cfg.q0s {
        out.extend((0..=2).map(|l| Task::Kalmykov { l, q0 }));
        out.push(Task::Bielski { q0 });
    }
    out.extend(CLASSICAL_CASES.iter().map(|&(l, m, n)| Task::Classical { l, m, n }));
    out
}

/// Runs every claim configured by `cfg`. A claim that cannot be evaluated
/// becomes a failed report; the suite itself never aborts.
pub fn full_suite(cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = tasks(cfg)
        .par_iter()
        .flat_map_iter(|task| task.run(cfg).unwrap_or_else(|e| vec![VerificationReport::failed(task.id(), &e)]))
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}
