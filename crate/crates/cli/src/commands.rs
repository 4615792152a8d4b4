//! The subcommands. Each validates its arguments up front, so that anything
//! failing afterwards is a numerical failure reported in the output.

use std::fmt::Display;
use std::str::FromStr;

use clap::Args;
use conical::conical::{eval, Degree, EvalPoint, Kind, Order};
use conical::kernels::{kernel, KernelName, Q_MIN};
use conical::verify::{
    audit_q_degree_conjugation, classical_orthogonality_check, full_suite, kalmykov_hutasoit_audit,
    kernel_comparison, smear_estimate, truncated_identity, QuadConfig, SuiteConfig, Tolerances,
    VerificationReport, WavePacket, AUDIT_X_GRID, IDENTITY_TOL,
};
use conical::Error;
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{Cell, Payload, Table};

/// A comma-separated list; the empty string is the empty list.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct List<T>(pub Vec<T>);

impl<T: FromStr> FromStr for List<T>
where
    T::Err: Display,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|e| format!("{p:?}: {e}")))
            .collect::<Result<Vec<T>, String>>()
            .map(List)
    }
}

/// Invalid arguments; the process exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn finite(name: &str, values: &[f64]) -> Result<(), Usage> {
    match values.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(Usage(format!("--{name} must be finite, got {v}"))),
        None => Ok(()),
    }
}

fn positive(name: &str, v: f64) -> Result<(), Usage> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Usage(format!("--{name} must be positive, got {v}")))
    }
}

fn non_empty<T>(name: &str, list: &List<T>) -> Result<(), Usage> {
    if list.0.is_empty() {
        return Err(Usage(format!("--{name} needs at least one value")));
    }
    Ok(())
}

/// A precondition error from the library is a usage error; anything else
/// becomes a failed report with the given id.
fn report_or_usage(id: String, r: conical::Result<Vec<VerificationReport>>) -> Result<Vec<VerificationReport>, Usage> {
    match r {
        Ok(reports) => Ok(reports),
        Err(e) if e.is_precondition() => Err(e.into()),
        Err(e) => Ok(vec![VerificationReport::failed(id, &e)]),
    }
}

fn collect(results: Vec<Result<Vec<VerificationReport>, Usage>>) -> Result<Payload, Usage> {
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Payload::Reports(reports))
}

/// Appends `Re z, Im z` to `row` and returns the row's error text, if any.
/// A precondition error aborts the command instead.
fn complex_cells(z: conical::Result<conical::Complex64>, row: &mut Vec<Cell>) -> Result<Option<String>, Usage> {
    let error = match z {
        Ok(z) if z.re.is_finite() && z.im.is_finite() => {
            row.extend([Cell::Num(z.re), Cell::Num(z.im)]);
            return Ok(None);
        }
        Ok(_) => "non-finite value".to_string(),
        Err(e) if e.is_precondition() => return Err(e.into()),
        Err(e) => e.to_string(),
    };
    row.extend([Cell::Null, Cell::Null]);
    Ok(Some(error))
}

/// Table of `P` or `Q` at fixed degree and order.
#[derive(Debug, Clone, Args, Serialize)]
pub struct EvalArgs {
    /// Function: P or Q.
    #[arg(long, default_value = "P")]
    pub kind: Kind,
    /// Degree parameter: lambda = -1/2 + i nu.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub nu: f64,
    /// Order parameter: mu = i q.
    #[arg(long, allow_hyphen_values = true)]
    pub q: f64,
    /// Points in (-1, 1), comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub x: List<f64>,
}

pub fn eval_table(a: &EvalArgs) -> Result<Payload, Usage> {
    finite("nu", &[a.nu])?;
    non_empty("x", &a.x)?;
    let order = Order::new(a.q)?;
    let points = a.x.0.iter().map(|&x| EvalPoint::new(x)).collect::<conical::Result<Vec<_>>>()?;
    let degree = Degree::conical(a.nu);
    let (mut rows, mut failed) = (Vec::new(), false);
    for pt in &points {
        let mut row = vec![Cell::Num(pt.x())];
        let error = complex_cells(eval(a.kind, &degree, order, pt), &mut row)?;
        failed |= error.is_some();
        row.push(error.map_or(Cell::Null, Cell::Text));
        rows.push(row);
    }
    Ok(Payload::Table(Table { columns: vec!["x", "re", "im", "error"], rows, failed }))
}

/// Table of the delta coefficients `A(q)`, `B(q)` of a named kernel.
#[derive(Debug, Clone, Args, Serialize)]
pub struct KernelArgs {
    /// Kernel: I1, I2, I3, J1, J2 or J3.
    #[arg(long)]
    pub name: KernelName,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub nu: f64,
    /// Orders, comma separated; each needs |q| >= 1e-3.
    #[arg(long, allow_hyphen_values = true)]
    pub q: List<f64>,
}

pub fn kernel_table(a: &KernelArgs) -> Result<Payload, Usage> {
    finite("nu", &[a.nu])?;
    non_empty("q", &a.q)?;
    finite("q", &a.q.0)?;
    if let Some(q) = a.q.0.iter().find(|q| q.abs() < Q_MIN) {
        return Err(Usage(format!("--q values need |q| >= {Q_MIN}, got {q}")));
    }
    let k = kernel(a.name, a.nu);
    let (mut rows, mut failed) = (Vec::new(), false);
    for &q in &a.q.0 {
        let mut row = vec![Cell::Num(q)];
        let ea = complex_cells(k.a(q), &mut row)?;
        let eb = complex_cells(k.b(q), &mut row)?;
        let error = ea.or(eb);
        failed |= error.is_some();
        row.push(error.map_or(Cell::Null, Cell::Text));
        rows.push(row);
    }
    Ok(Payload::Table(Table { columns: vec!["q", "a_re", "a_im", "b_re", "b_im", "error"], rows, failed }))
}

/// Orthogonality integral of `P^{iq}` and `P^{iq'}` on `[a, b]` against its boundary terms.
#[derive(Debug, Clone, Args, Serialize)]
pub struct IdentityArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub nu: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub q: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub qp: f64,
    #[arg(long, default_value_t = -0.95, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 0.9, allow_hyphen_values = true)]
    pub b: f64,
    /// Relative tolerance.
    #[arg(long, default_value_t = IDENTITY_TOL)]
    pub tol: f64,
}

pub fn verify_identity(a: &IdentityArgs) -> Result<Payload, Usage> {
    finite("nu", &[a.nu])?;
    positive("tol", a.tol)?;
    let id = format!("identity.nu={}.q={}.qp={}", a.nu, a.q, a.qp);
    let result = truncated_identity(&Degree::conical(a.nu), a.q, a.qp, a.a, a.b).map(|r| vec![r.rejudged(a.tol)]);
    collect(vec![report_or_usage(id, result)])
}

/// Smeared delta coefficients against the closed forms.
#[derive(Debug, Clone, Args, Serialize)]
pub struct DeltaArgs {
    /// Kernels, comma separated.
    #[arg(long, default_value = "I1,I2,I3,J1,J2,J3")]
    pub name: List<KernelName>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub nu: List<f64>,
    /// Packet centres, comma separated.
    #[arg(long, default_value = "1,2,3", allow_hyphen_values = true)]
    pub q0: List<f64>,
    /// Packet width.
    #[arg(long, default_value_t = 0.1)]
    pub sigma: f64,
    /// Relative tolerance of each coefficient.
    #[arg(long, default_value_t = 1e-2)]
    pub tol: f64,
}

pub fn verify_delta(a: &DeltaArgs) -> Result<Payload, Usage> {
    finite("nu", &a.nu.0)?;
    positive("sigma", a.sigma)?;
    positive("tol", a.tol)?;
    let packets = a.q0.0.iter().map(|&q0| WavePacket::new(q0, a.sigma)).collect::<conical::Result<Vec<_>>>()?;
    let cfg = QuadConfig::for_packet(a.sigma);
    let mut jobs = Vec::new();
    for &name in &a.name.0 {
        for &nu in &a.nu.0 {
            jobs.extend(packets.iter().map(|&p| (name, nu, p)));
        }
    }
    let results = jobs
        .par_iter()
        .map(|&(name, nu, packet)| {
            let q0 = packet.center();
            let result = smear_estimate(&name.pair_spec(nu), q0, &packet, &cfg)
                .and_then(|est| kernel_comparison(name, nu, q0, &est, a.tol));
            report_or_usage(format!("delta.{name}.nu={nu}.q0={q0}"), result)
        })
        .collect();
    collect(results)
}

/// Integer-order Ferrers orthogonality integral over the order index.
#[derive(Debug, Clone, Args, Serialize)]
pub struct ClassicalArgs {
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

pub fn classical(a: &ClassicalArgs) -> Result<Payload, Usage> {
    positive("tol", a.tol)?;
    let id = format!("classical.l={}.m={}.n={}", a.l, a.m, a.n);
    let result = classical_orthogonality_check(a.l, a.m, a.n).map(|r| vec![r.rejudged(a.tol)]);
    collect(vec![report_or_usage(id, result)])
}

/// Degree-conjugation audit of `Q` and the slot audit of the plain pairing at integer degree.
#[derive(Debug, Clone, Args, Serialize)]
pub struct AuditArgs {
    /// Degrees of the Q audit.
    #[arg(long, default_value = "0,0.5,1", allow_hyphen_values = true)]
    pub nu: List<f64>,
    /// Orders of the Q audit.
    #[arg(long, default_value = "0.5,1", allow_hyphen_values = true)]
    pub q: List<f64>,
    /// Integer degrees (0, 1 or 2) of the slot audit.
    #[arg(long, default_value = "0,1,2")]
    pub l: List<u32>,
    /// Packet centre of the slot audit.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub q0: f64,
    #[arg(long, default_value_t = 0.1)]
    pub sigma: f64,
}

pub fn audit(a: &AuditArgs) -> Result<Payload, Usage> {
    finite("nu", &a.nu.0)?;
    finite("q", &a.q.0)?;
    positive("sigma", a.sigma)?;
    for &q in &a.q.0 {
        Order::new(q)?;
    }
    let packet = if a.l.0.is_empty() { None } else { Some(WavePacket::new(a.q0, a.sigma)?) };
    let cfg = QuadConfig::for_packet(a.sigma);
    let mut results: Vec<Result<Vec<VerificationReport>, Usage>> = a
        .nu
        .0
        .par_iter()
        .flat_map_iter(|&nu| a.q.0.iter().map(move |&q| (nu, q)))
        .map(|(nu, q)| report_or_usage(format!("audit.q.nu={nu}.q={q}"), audit_q_degree_conjugation(nu, q, &AUDIT_X_GRID)))
        .collect();
    if let Some(packet) = packet {
        results.extend(a.l.0.par_iter().map(|&l| {
            let id = format!("audit.kalmykov.l={l}.q0={}", a.q0);
            report_or_usage(id, kalmykov_hutasoit_audit(l, a.q0, &packet, &cfg).map(|r| vec![r]))
        }).collect::<Vec<_>>());
    }
    collect(results)
}

/// Every configured claim; an empty `--nu` and `--q0` select nothing.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SuiteArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub nu: List<f64>,
    #[arg(long, default_value = "1,2,3", allow_hyphen_values = true)]
    pub q0: List<f64>,
    #[arg(long, default_value_t = 0.1)]
    pub sigma: f64,
    #[arg(long, default_value_t = IDENTITY_TOL)]
    pub tol_identity: f64,
    #[arg(long, default_value_t = 1e-2)]
    pub tol_delta: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol_classical: f64,
}

pub fn suite(a: &SuiteArgs) -> Result<Payload, Usage> {
    finite("nu", &a.nu.0)?;
    positive("sigma", a.sigma)?;
    positive("tol-identity", a.tol_identity)?;
    positive("tol-delta", a.tol_delta)?;
    positive("tol-classical", a.tol_classical)?;
    for &q0 in &a.q0.0 {
        WavePacket::new(q0, a.sigma)?;
    }
    let cfg = SuiteConfig {
        nus: a.nu.0.clone(),
        q0s: a.q0.0.clone(),
        sigma: a.sigma,
        quad: QuadConfig::for_packet(a.sigma),
        tolerances: Tolerances { identity: a.tol_identity, delta: a.tol_delta, classical: a.tol_classical },
    };
    Ok(Payload::Reports(full_suite(&cfg)))
}
