//! Randomized invariants of the numeric kernels and the model-specific
//! structure promised by the library's contracts.

use heatlab_core::ansatz::{u_app, u_app_deriv};
use heatlab_core::models::{model1_exact, model1_flux, model3_implicit_solve, Epsilon};
use heatlab_core::numerics::{find_root, integrate, Bracket};
use heatlab_core::series::{
    cauchy_product, model1_coeffs, model2_coeffs, series_derivative, series_eval, PowerSeries,
};
use proptest::prelude::*;

const QUAD_TOL: f64 = 1e-10;

fn eval_poly(c: &[f64; 6], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * x + v)
}

/// Antiderivative of the degree-5 polynomial with coefficients `c`,
/// evaluated at x (constant term zero).
fn eval_poly_integral(c: &[f64; 6], x: f64) -> f64 {
    let mut acc = 0.0;
    for (j, &v) in c.iter().enumerate().rev() {
        acc = acc * x + v / (j + 1) as f64;
    }
    acc * x
}

proptest! {
    #[test]
    fn quadrature_is_linear(
        a in proptest::array::uniform6(-2.0..2.0f64),
        b in proptest::array::uniform6(-2.0..2.0f64),
        alpha in -3.0..3.0f64,
        beta in -3.0..3.0f64,
    ) {
        let fa = integrate(|x| eval_poly(&a, x), 0.0, 1.0, QUAD_TOL).unwrap();
        let fb = integrate(|x| eval_poly(&b, x), 0.0, 1.0, QUAD_TOL).unwrap();
        let combined = integrate(
            |x| alpha * eval_poly(&a, x) + beta * eval_poly(&b, x),
            0.0,
            1.0,
            QUAD_TOL,
        )
        .unwrap();
        prop_assert!((combined - (alpha * fa + beta * fb)).abs() <= 10.0 * QUAD_TOL);
    }

    #[test]
    fn quadrature_integrates_low_degree_polynomials_exactly(
        c in proptest::array::uniform6(-2.0..2.0f64),
        bounds in (0.0..1.0f64, 0.0..1.0f64),
    ) {
        let (lo, hi) = if bounds.0 <= bounds.1 { bounds } else { (bounds.1, bounds.0) };
        let v = integrate(|x| eval_poly(&c, x), lo, hi, QUAD_TOL).unwrap();
        let exact = eval_poly_integral(&c, hi) - eval_poly_integral(&c, lo);
        prop_assert!((v - exact).abs() <= 2.0 * QUAD_TOL, "{v} vs {exact}");
    }

    #[test]
    fn root_finder_stays_inside_bracket_and_finds_the_root(
        r in -1.0..1.0f64,
        scale in 0.1..10.0f64,
        cubic in 0.0..5.0f64,
    ) {
        // Strictly increasing cubic with its only real root at r.
        let f = move |x: f64| scale * (x - r) * (1.0 + cubic * (x - r) * (x - r));
        let bracket = Bracket { lo: r - 2.0, hi: r + 2.0 };
        let out = find_root(f, bracket, 1e-12).unwrap();
        prop_assert!(bracket.lo <= out.root && out.root <= bracket.hi);
        prop_assert!((out.root - r).abs() < 1e-9, "root {} vs {r}", out.root);
    }

    #[test]
    fn slab_closed_form_meets_both_boundaries(e in 1e-6..10.0f64) {
        let eps = Epsilon::new(e).unwrap();
        let at0 = model1_exact(0.0, eps).unwrap();
        prop_assert!((at0 - 1.0).abs() < 1e-13, "u(0) = {at0}");
        prop_assert_eq!(model1_exact(1.0, eps).unwrap(), 0.0);
    }

    #[test]
    fn cooling_solution_decreases_in_time(
        mut xs in proptest::collection::vec(0.0..3.0f64, 2..8),
        e in 1e-3..5.0f64,
    ) {
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        prop_assume!(xs.len() >= 2);
        let eps = Epsilon::new(e).unwrap();
        let us: Vec<f64> = xs
            .iter()
            .map(|&x| model3_implicit_solve(x, eps, 1e-13).unwrap())
            .collect();
        for pair in us.windows(2) {
            prop_assert!(pair[1] < pair[0], "not strictly decreasing: {us:?}");
        }
    }

    #[test]
    fn fin_series_is_even_with_nonnegative_coefficients(
        u0 in 0.05..1.0f64,
        e in 1e-3..5.0f64,
        order in 4usize..40,
    ) {
        let s = model2_coeffs(u0, Epsilon::new(e).unwrap(), order).unwrap();
        for j in (1..=order).step_by(2) {
            prop_assert_eq!(s.coeff(j), 0.0, "odd coefficient {} nonzero", j);
        }
        for j in (0..=order).step_by(2) {
            prop_assert!(s.coeff(j) >= 0.0, "even coefficient {} negative", j);
        }
    }

    #[test]
    fn fin_series_satisfies_its_ode_through_truncation_order(
        u0 in 0.05..1.0f64,
        e in 1e-3..5.0f64,
        order in 6usize..36,
    ) {
        let eps = Epsilon::new(e).unwrap();
        let u = model2_coeffs(u0, eps, order).unwrap();
        let usecond = series_derivative(&series_derivative(&u));
        let usq = cauchy_product(&u, &u);
        let u4 = cauchy_product(&usq, &usq);
        for k in 0..=(order - 2) {
            let lhs = usecond.coeff(k);
            let rhs = e * u4.coeff(k);
            let scale = 1.0 + lhs.abs().max(rhs.abs());
            prop_assert!(
                (lhs - rhs).abs() <= 1e-12 * scale,
                "order {} residual {} vs scale {}",
                k,
                lhs - rhs,
                scale
            );
        }
    }

    #[test]
    fn slab_series_satisfies_its_ode_through_truncation_order(
        slope in -2.0..-0.05f64,
        e in 1e-3..5.0f64,
        order in 6usize..36,
    ) {
        let eps = Epsilon::new(e).unwrap();
        let u = model1_coeffs(slope, eps, order).unwrap();
        let uprime = series_derivative(&u);
        let usecond = series_derivative(&uprime);
        // (1 + eps u) u'' + eps (u')^2, coefficient by coefficient.
        let mut conductivity = vec![0.0; order + 1];
        conductivity[0] = 1.0;
        for (j, c) in conductivity.iter_mut().enumerate() {
            *c += e * u.coeff(j);
        }
        let conductivity = PowerSeries::new(conductivity).unwrap();
        let lead = cauchy_product(&conductivity, &usecond);
        let dsq = cauchy_product(&uprime, &uprime);
        for k in 0..=(order - 2) {
            let r = lead.coeff(k) + e * dsq.coeff(k);
            let scale = 1.0 + lead.coeff(k).abs().max((e * dsq.coeff(k)).abs());
            prop_assert!(
                r.abs() <= 1e-12 * scale,
                "order {} residual {} vs scale {}",
                k,
                r,
                scale
            );
        }
    }

    #[test]
    fn trial_profile_identities_hold_for_any_parameter(b in 1e-3..20.0f64) {
        prop_assert_eq!(u_app(1.0, b), 1.0);
        prop_assert_eq!(u_app_deriv(0.0, b), 0.0);
        // Evenness: the parameter's sign is immaterial.
        prop_assert_eq!(u_app(0.37, b), u_app(0.37, -b));
    }
}

proptest! {
    #[test]
    fn fin_boundary_map_is_strictly_increasing_in_the_seed(
        a in 0.05..0.99f64,
        delta in 0.005..0.5f64,
        e in 0.1..3.0f64,
    ) {
        let b = (a + delta).min(1.0);
        prop_assume!(b - a >= 0.005);
        let eps = Epsilon::new(e).unwrap();
        let boundary =
            |u0: f64| series_eval(&model2_coeffs(u0, eps, 20).unwrap(), 1.0);
        prop_assert!(boundary(a) < boundary(b), "map not increasing on ({a}, {b})");
    }
}

#[test]
fn flux_is_constant_along_the_exact_slab_profile() {
    for e in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let eps = Epsilon::new(e).unwrap();
        let a = (1.0 + e) * (1.0 + e);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            let u = model1_exact(x, eps).unwrap();
            let uprime = (1.0 - a) / (2.0 * e * (a + (1.0 - a) * x).sqrt());
            let flux = model1_flux(u, uprime, eps);
            lo = lo.min(flux);
            hi = hi.max(flux);
        }
        let spread = (hi - lo) / hi.abs().max(lo.abs());
        assert!(spread < 1e-10, "eps = {e}: relative flux spread {spread}");
        // The constant is the closed-form heat flow -(2 + eps)/2.
        assert!((lo + (2.0 + e) / 2.0).abs() < 1e-10);
    }
}
