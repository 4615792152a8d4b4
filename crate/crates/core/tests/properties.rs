//! Randomised checks of the algebraic invariants of each layer.

use std::f64::consts::PI;

use proptest::prelude::*;

use conical::conical::{eval_p, eval_p_reflected, ode_residual, Degree, EvalPoint, Kind, Order};
use conical::kernels::{closure_deviation, kernel, KernelName};
use conical::scalar::rel_diff;
use conical::special::{gamma, hyp2f1, Hyp2F1Params};
use conical::verify::{smear_estimate, truncated_identity, QuadConfig, WavePacket, IDENTITY_TOL};
use conical::Complex64 as C;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn pole_distance(z: C) -> f64 {
    if z.re > 0.5 {
        return f64::INFINITY;
    }
    (z - C::new(z.re.round(), 0.0)).norm()
}

fn gamma_arg() -> impl Strategy<Value = C> {
    (-8.9..10.0f64, -10.0..10.0f64)
        .prop_map(|(re, im)| C::new(re, im))
        .prop_filter("|z| <= 10 and off the poles", |z| z.norm() <= 10.0 && pole_distance(*z) > 1e-3)
}

fn small_complex(bound: f64) -> impl Strategy<Value = C> {
    (-bound..bound, -bound..bound).prop_map(|(re, im)| C::new(re, im))
}

/// Order magnitudes away from the q = 0 singularity of the evaluators.
fn order() -> impl Strategy<Value = f64> {
    (0.1..5.0f64, any::<bool>()).prop_map(|(q, neg)| if neg { -q } else { q })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn gamma_recurrence(z in gamma_arg()) {
        let g1 = gamma(z + 1.0).unwrap();
        let g = gamma(z).unwrap();
        prop_assert!(rel_diff(z * g, g1, 1e-300) <= 1e-11);
    }

    #[test]
    fn gamma_reflection(re in -6.0..6.0f64, im in -5.0..5.0f64) {
        let z = C::new(re, im);
        prop_assume!((z - C::new(re.round(), 0.0)).norm() > 1e-2);
        let lhs = gamma(z).unwrap() * gamma(C::new(1.0, 0.0) - z).unwrap();
        let rhs = C::new(PI, 0.0) / (z * PI).sin();
        prop_assert!(rel_diff(lhs, rhs, 1e-300) <= 1e-10);
    }

    #[test]
    fn hyp2f1_parameter_symmetry(a in small_complex(6.0), b in small_complex(6.0), c in small_complex(6.0), z in 0.0..0.999f64) {
        let c = c + 7.0;
        let ab = Hyp2F1Params::new(a, b, c, z).unwrap();
        let ba = Hyp2F1Params::new(b, a, c, z).unwrap();
        match (hyp2f1(&ab), hyp2f1(&ba)) {
            (Ok(u), Ok(v)) => prop_assert_eq!(u, v),
            (u, v) => prop_assert_eq!(u.is_err(), v.is_err()),
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn euler_transformation(a in small_complex(3.0), b in small_complex(3.0), c in small_complex(3.0), z in 0.05..0.9f64) {
        let c = C::new(c.re.abs() + 0.5, c.im);
        let d = c - a - b;
        // The z -> 1 - z route needs c - a - b and its Euler partner away from integers.
        prop_assume!((d - C::new(d.re.round(), 0.0)).norm() > 0.05);
        let lhs = hyp2f1(&Hyp2F1Params::new(a, b, c, z).unwrap()).unwrap();
        let rhs = hyp2f1(&Hyp2F1Params::new(c - a, c - b, c, z).unwrap()).unwrap() * C::new(1.0 - z, 0.0).powc(d);
        let scale = lhs.norm().max(1e-3);
        prop_assert!((lhs - rhs).norm() / scale <= 1e-9, "lhs {lhs}, rhs {rhs}");
    }

    #[test]
    fn p_degree_conjugation(nu in -3.0..3.0f64, q in order(), x in -0.95..0.95f64) {
        let pt = EvalPoint::new(x).unwrap();
        let o = Order::new(q).unwrap();
        let p = eval_p(&Degree::conical(nu), o, &pt).unwrap();
        let p_conj = eval_p(&Degree::conical(-nu), o, &pt).unwrap();
        prop_assert!(rel_diff(p_conj, p, 1e-300) <= 1e-10);
    }

    #[test]
    fn p_order_conjugation(nu in -3.0..3.0f64, q in order(), x in -0.95..0.95f64) {
        let pt = EvalPoint::new(x).unwrap();
        let d = Degree::conical(nu);
        let p = eval_p(&d, Order::new(q).unwrap(), &pt).unwrap();
        let p_neg = eval_p(&d, Order::new(-q).unwrap(), &pt).unwrap();
        prop_assert!(rel_diff(p.conj(), p_neg, 1e-300) <= 1e-10);
    }

    #[test]
    fn p_reflection_consistency(nu in -3.0..3.0f64, q in order(), x in -0.9..0.9f64) {
        let d = Degree::conical(nu);
        let o = Order::new(q).unwrap();
        let pt = EvalPoint::new(x).unwrap();
        let direct = eval_p(&d, o, &pt.reflect()).unwrap();
        let reflected = eval_p_reflected(&d, o, &pt).unwrap();
        prop_assert!(rel_diff(reflected, direct, 1e-300) <= 1e-8);
    }

    #[test]
    fn ode_residual_is_small(nu in -3.0..3.0f64, q in order(), x in -0.95..0.95f64, is_q in any::<bool>()) {
        let kind = if is_q { Kind::Q } else { Kind::P };
        let r = ode_residual(kind, &Degree::conical(nu), Order::new(q).unwrap(), &EvalPoint::new(x).unwrap()).unwrap();
        prop_assert!(r <= 1e-6, "residual {r:e}");
    }

    #[test]
    fn kernel_scaling_and_evenness(nu in -2.0..2.0f64, q in order()) {
        let s = PI * PI / 4.0;
        let (a1, b1) = kernel(KernelName::I1, nu).eval(q).unwrap();
        let (a3, b3) = kernel(KernelName::I3, nu).eval(q).unwrap();
        prop_assert!(rel_diff(a3, a1 * s, 1e-300) <= 1e-14);
        prop_assert!(rel_diff(b3, b1 * s, 1e-300) <= 1e-14);
        prop_assert!(rel_diff(kernel(KernelName::I1, nu).a(-q).unwrap(), a1, 1e-300) <= 1e-13);
    }

    #[test]
    fn derivation_chain_closes(nu in -2.0..2.0f64, q in order()) {
        for name in [KernelName::I2, KernelName::I3, KernelName::J1, KernelName::J2, KernelName::J3] {
            let (da, db) = closure_deviation(name, nu, q).unwrap().unwrap();
            prop_assert!(da <= 1e-10 && db <= 1e-10, "{name}: {da:e} {db:e}");
        }
    }
}

fn standard_box() -> impl Strategy<Value = (f64, f64, f64, f64, f64)> {
    (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -0.99..0.99f64, -0.99..0.99f64)
        .prop_filter("separated orders and ordered interval", |&(_, q, qp, a, b)| {
            (q * q - qp * qp).abs() >= 0.25 && q.abs() >= 0.1 && qp.abs() >= 0.1 && a < b
        })
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn truncated_identity_in_standard_box((nu, q, qp, a, b) in standard_box()) {
        let r = truncated_identity(&Degree::conical(nu), q, qp, a, b).unwrap();
        prop_assert!(r.rel_error <= IDENTITY_TOL, "{r:?}");
        prop_assert!(r.passed());
    }
}

proptest! {
    #![proptest_config(config(4))]

    #[test]
    fn estimator_is_linear_in_amplitude(scale in 0.1..10.0f64, q0 in 1.0..3.0f64) {
        let cfg = QuadConfig::for_packet(0.1);
        let spec = KernelName::I1.pair_spec(0.5);
        let unit = smear_estimate(&spec, q0, &WavePacket::new(q0, 0.1).unwrap(), &cfg).unwrap();
        let scaled = smear_estimate(&spec, q0, &WavePacket::with_amplitude(q0, 0.1, scale).unwrap(), &cfg).unwrap();
        prop_assert!(rel_diff(scaled.a, unit.a * scale, 1e-300) <= 1e-8);
        prop_assert!(rel_diff(scaled.b, unit.b * scale, 1e-300) <= 1e-8);
    }
}

#[test]
fn halving_the_width_keeps_estimates_stable() {
    for (name, nu, q0) in [(KernelName::I1, 0.0, 2.0), (KernelName::J2, 0.5, 1.5)] {
        let spec = name.pair_spec(nu);
        let at = |sigma: f64| {
            smear_estimate(&spec, q0, &WavePacket::new(q0, sigma).unwrap(), &QuadConfig::for_packet(sigma)).unwrap()
        };
        let (coarse, fine) = (at(0.1), at(0.05));
        let band = 1e-2;
        assert!(rel_diff(fine.a, coarse.a, 1e-300) < band, "{name}: {} vs {}", fine.a, coarse.a);
        let reference = coarse.a.norm().max(coarse.b.norm());
        assert!((fine.b - coarse.b).norm() < band * reference, "{name}: {} vs {}", fine.b, coarse.b);
    }
}

#[test]
fn modulus_identity_on_the_imaginary_axis() {
    for y in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let g = gamma(C::new(0.0, y)).unwrap();
        let expected = PI / (y * (PI * y).sinh());
        assert!((g.norm_sqr() - expected).abs() <= 1e-10 * expected, "y = {y}");
    }
}
