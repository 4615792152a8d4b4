//! Reports that compare estimates with closed forms, and audits of claims
//! whose truth is measured rather than assumed.

use num_complex::Complex64;

use super::quadrature::QuadConfig;
use super::smear::{smear_estimate, SmearEstimate};
use super::{Status, VerificationReport, WavePacket};
use crate::conical::{eval_q, Degree, EvalPoint, Kind, Order};
use crate::error::Result;
use crate::kernels::{
    bielski_bracket, bielski_diag_coefficient, check_conjugation, kernel, kernel_j2_published, ConditionKind, KernelName,
    KernelPairSpec, Pairing, Reflection,
};

/// Smeared `(A, B)` against the closed form of `name` at `(nu, q0)`.
///
/// A coefficient that is exactly zero is judged against the magnitude of its
/// partner. At `nu != 0` the I2, I3, J2 and J3 comparisons are flagged as
/// recorded rather than failed when they disagree.
pub fn kernel_comparison(
    name: KernelName,
    nu: f64,
    q0: f64,
    est: &SmearEstimate,
    tolerance: f64,
) -> Result<Vec<VerificationReport>> {
    let (a, b) = kernel(name, nu).eval(q0)?;
    let audit_only = nu != 0.0 && !matches!(name, KernelName::I1 | KernelName::J1);
    let slot = |label: &str, predicted: Complex64, partner: Complex64, estimated: Complex64, err: f64| {
        let reference = if predicted.norm() > 0.0 { predicted.norm() } else { partner.norm() };
        let mut r = VerificationReport::against(
            format!("delta.{name}.nu={nu}.q0={q0}.{label}"),
            predicted,
            estimated,
            tolerance,
            reference,
        );
        let mut detail = format!("quadrature error estimate {err:.3e}; judged against {reference:.6e}");
        if audit_only && r.status == Status::Fail {
            r.status = Status::Recorded;
            detail.push_str("; disagreement flagged for nu != 0");
        }
        r.with_detail(detail)
    };
    Ok(vec![slot("A", a, b, est.a, est.err_a), slot("B", b, a, est.b, est.err_b)])
}

/// The `A` coefficient of J2 as usually quoted, against the smeared value.
pub fn j2_published_audit(nu: f64, q0: f64, est: &SmearEstimate) -> Result<VerificationReport> {
    let published = kernel_j2_published(nu).a(q0)?;
    let report = VerificationReport::measured(format!("audit.j2-published.nu={nu}.q0={q0}.A"), published, est.a, 1e-2);
    let ratio = est.a.re / published.re;
    Ok(report.with_detail(format!("estimated / published = {ratio:.10}")))
}

/// One recorded report per conjugation condition of `name` at `nu`.
pub fn conjugation_reports(name: KernelName, nu: f64, q_grid: &[f64]) -> Result<Vec<VerificationReport>> {
    let report = check_conjugation(name, nu, q_grid)?;
    Ok(report
        .conditions
        .iter()
        .map(|c| {
            let slug: String = c.statement.chars().filter(|ch| !ch.is_whitespace()).collect();
            let kind = match c.kind {
                ConditionKind::Definitional => "definitional",
                ConditionKind::DerivedClaim => "derived claim",
            };
            let verdict = if c.holds { "holds" } else { "does not hold" };
            VerificationReport::measured(
                format!("conjugation.{name}.nu={nu}.{slug}"),
                Complex64::default(),
                Complex64::new(c.max_deviation, 0.0),
                crate::kernels::CONJUGATION_TOL,
            )
            .with_detail(format!("{} ({kind}): {verdict}", c.statement))
        })
        .collect())
}

/// Measures `|Q_lambda^{iq} - Q_{lambda*}^{iq}|` and `|conj(Q^{iq}) - Q^{-iq}|`
/// over `x_grid`, each relative to the largest `|Q_lambda^{iq}|` there.
pub fn audit_q_degree_conjugation(nu: f64, q: f64, x_grid: &[f64]) -> Result<Vec<VerificationReport>> {
    let d = Degree::conical(nu);
    let dc = d.conjugate();
    let (o, on) = (Order::new(q)?, Order::new(-q)?);
    let (mut scale, mut degree_dev, mut order_dev) = (0.0f64, 0.0f64, 0.0f64);
    for &x in x_grid {
        let pt = EvalPoint::new(x)?;
        let base = eval_q(&d, o, &pt)?;
        scale = scale.max(base.norm());
        degree_dev = degree_dev.max((base - eval_q(&dc, o, &pt)?).norm());
        order_dev = order_dev.max((base.conj() - eval_q(&d, on, &pt)?).norm());
    }
    let scale = scale.max(f64::MIN_POSITIVE);
    let report = |what: &str, dev: f64, claim: &str| {
        VerificationReport::measured(
            format!("audit.{what}.nu={nu}.q={q}"),
            Complex64::default(),
            Complex64::new(dev / scale, 0.0),
            1e-8,
        )
        .with_detail(format!("{claim}; max over {} points, relative to max |Q| = {scale:.6e}", x_grid.len()))
    };
    Ok(vec![
        report("q-degree-conjugation", degree_dev, "Q_lambda = Q_conj(lambda)"),
        report("q-order-conjugation", order_dev, "conj(Q^{iq}) = Q^{-iq}"),
    ])
}

/// Smears the plain pairing at general degree `lambda` and records the
/// estimated `A` against the diagonal coefficient and the estimated `B`
/// against the bracketed expression.
pub fn bielski_audit(
    lambda: Complex64,
    q0: f64,
    packet: &WavePacket,
    cfg: &QuadConfig,
) -> Result<Vec<VerificationReport>> {
    let degree = Degree::general(lambda);
    let spec = KernelPairSpec { left: Kind::P, right: Kind::P, pairing: Pairing::Plain, reflection: Reflection::Same, degree };
    let est = smear_estimate(&spec, q0, packet, cfg)?;
    let diag = bielski_diag_coefficient(&degree, q0)?;
    let bracket = bielski_bracket(&degree, q0)?;
    let id = format!("audit.bielski.lambda={lambda}.q0={q0}");
    Ok(vec![
        VerificationReport::measured(format!("{id}.A"), diag, est.a, 1e-2)
            .with_detail(format!("diagonal coefficient; quadrature error estimate {:.3e}", est.err_a)),
        VerificationReport::measured(format!("{id}.B"), bracket, est.b, 1e-2)
            .with_detail(format!("bracketed expression as the delta(q + q') weight; quadrature error estimate {:.3e}", est.err_b)),
    ])
}
