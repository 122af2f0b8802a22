//! Dual-method agreement: every singular integral computed by the adaptive
//! Gauss–Kronrod engine is checked against the independent graded-mesh
//! Gauss–Legendre oracle.

mod common;

use std::f64::consts::PI;

use hardy_verify::hardy_norms::h1_norm_boundary;
use hardy_verify::singular_quad::{
    intermediate_bound_check, kernel_integral, log_ratio_subintegral, theorem1_lhs,
};
use hardy_verify::{eta_grid, QuadConfig, TaylorPoly, UnitComplex};
use num_complex::Complex64;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn kernel_integral_agrees_with_graded_oracle() {
    for theta in [0.3, PI / 2.0, 2.0, 3.0] {
        let q = kernel_integral(theta, &cfg()).unwrap();
        let integrand = |t: f64| {
            let num = (0.5 * (theta + t)).sin().abs();
            let den = (0.5 * (theta - t)).sin().abs();
            ((num / den).ln()).abs() / (0.5 * t).sin()
        };
        let oracle = common::oracle_integral(&integrand, &[0.0, theta, PI]) / PI;
        assert!(
            (q.value - oracle).abs() <= 1e-10 + q.err_est,
            "theta {theta}: engine {} oracle {oracle}",
            q.value
        );
    }
}

#[test]
fn theorem1_lhs_agrees_with_graded_oracle() {
    let cases = [
        (TaylorPoly::monomial(2), UnitComplex::one()),
        (TaylorPoly::random_poly(6, 5), UnitComplex::from_angle(1.3)),
        (TaylorPoly::make_log_family(5), UnitComplex::from_angle(4.0)),
    ];
    for (f, eta) in cases {
        let q = theorem1_lhs(&f, &eta, &cfg()).unwrap();
        let g = f.rotate(&eta);
        let limit = 2.0 * g.derivative().eval_on_circle(0.0).norm();
        let integrand = move |t: f64| {
            if t == 0.0 {
                limit
            } else {
                (g.eval_on_circle(t) - g.eval_on_circle(-t)).norm() / (2.0 * (0.5 * t).sin())
            }
        };
        // Interior corners of the numerator modulus sit at unknown angles, so
        // the independent route is a brute-force fine-grid rule.
        let oracle = common::simpson_oracle(&integrand, 0.0, PI, 1 << 21) / PI;
        assert!(
            (q.value - oracle).abs() <= 1e-9 + q.err_est,
            "{}: engine {} oracle {oracle}",
            f.spec_string(),
            q.value
        );
    }
}

#[test]
fn h1_norm_agrees_with_graded_oracle() {
    // 1 + z (corner at t = π) and the degree-7 derivative of the log family
    // (seven circle zeros).
    let one_plus_z = TaylorPoly::from_real(&[1.0, 1.0]);
    let q = h1_norm_boundary(&one_plus_z, &cfg()).unwrap();
    let f = |t: f64| one_plus_z.eval_on_circle(t).norm();
    let oracle = common::oracle_integral(&f, &[0.0, PI, 2.0 * PI]) / (2.0 * PI);
    assert!((q.value - oracle).abs() <= 1e-11 + q.err_est);
    assert!((oracle - 4.0 / PI).abs() < 1e-13, "oracle vs closed form");

    let dirichlet = TaylorPoly::make_log_family(8).derivative();
    let q = h1_norm_boundary(&dirichlet, &cfg()).unwrap();
    let f = |t: f64| dirichlet.eval_on_circle(t).norm();
    let breaks: Vec<f64> = (0..=8).map(|j| 2.0 * PI * j as f64 / 8.0).collect();
    let oracle = common::oracle_integral(&f, &breaks) / (2.0 * PI);
    assert!(
        (q.value - oracle).abs() <= 1e-10 + q.err_est,
        "engine {} oracle {oracle}",
        q.value
    );
}

#[test]
fn subintegral_agrees_with_series_oracle() {
    let q = log_ratio_subintegral(&cfg()).unwrap();
    let series = common::odd_reciprocal_square_series();
    assert!(
        (q.value - series).abs() <= 1e-10 + q.err_est,
        "quadrature {} series {series}",
        q.value
    );
    assert!((series - PI * PI / 4.0).abs() < 1e-13);
}

#[test]
fn intermediate_bound_rhs_agrees_with_graded_oracle() {
    let f = TaylorPoly::from_real(&[0.0, 1.0]);
    let zeta = UnitComplex::from_angle(PI / 3.0);
    let rec =
        intermediate_bound_check(&f, &UnitComplex::one(), &zeta, 0.5, &cfg()).unwrap();

    let zv = zeta.value();
    let integrand = move |s: f64| {
        let xi = Complex64::from_polar(1.0, s);
        let a = (Complex64::new(1.0, 0.0) - xi * zv).norm_sqr();
        let b = (Complex64::new(1.0, 0.0) - xi * zv.conj()).norm_sqr();
        ((a / b).ln()).abs()
    };
    let oracle = common::oracle_integral(
        &integrand,
        &[0.0, PI / 3.0, PI, 5.0 * PI / 3.0, 2.0 * PI],
    ) / (2.0 * PI);
    assert!(
        (rec.rhs - oracle).abs() <= 1e-9 + rec.quad_err,
        "engine {} oracle {oracle}",
        rec.rhs
    );
}

#[test]
fn theorem1_sweep_margins_recorded_for_random_function() {
    // Theorem-backed regression: all cells pass with positive margin.
    let f = TaylorPoly::random_poly(16, 7);
    let sweep =
        hardy_verify::singular_quad::verify_theorem1(&f, &eta_grid(64), &cfg()).unwrap();
    assert_eq!(sweep.records.len(), 64);
    assert_eq!(sweep.numerics_failures, 0);
    for rec in &sweep.records {
        assert!(rec.pass);
        assert!(rec.margin > 0.0, "eta {}: margin {}", rec.eta, rec.margin);
    }
}
