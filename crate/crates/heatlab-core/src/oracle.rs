//! Fixed-step classical Runge-Kutta reference integrators and RK4-based
//! shooting: the path that validates the series and ansatz machinery
//! without sharing any code with them beyond the root finder.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::models::Epsilon;
use crate::numerics::{self, Bracket};

/// Default step count for the reference integrators.
pub const DEFAULT_STEPS: usize = 10_000;

/// State of a second-order integration reduced to first order:
/// position x and the pair (u, u') = (u, v).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IvpState {
    /// Independent variable.
    pub x: f64,
    /// Solution value.
    pub u: f64,
    /// Solution derivative.
    pub v: f64,
}

/// Which producer a sampled profile came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Closed or implicit form.
    Exact,
    /// Truncated Taylor series with shooting.
    Taylor,
    /// Cosh trial fitted with weight w(u) = u.
    Virial,
    /// Cosh trial fitted with weight w(u) = 1.
    Hypervirial,
    /// The claimed symmetry-reduction fin form.
    Lie,
    /// Fixed-step Runge-Kutta reference.
    Rk4,
}

impl Method {
    /// Label used in CSV headers and command-line flags.
    pub fn label(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Taylor => "taylor",
            Method::Virial => "virial",
            Method::Hypervirial => "hypervirial",
            Method::Lie => "lie",
            Method::Rk4 => "rk4",
        }
    }

    /// Inverse of [`Method::label`].
    pub fn parse_label(s: &str) -> Option<Method> {
        match s {
            "exact" => Some(Method::Exact),
            "taylor" => Some(Method::Taylor),
            "virial" => Some(Method::Virial),
            "hypervirial" => Some(Method::Hypervirial),
            "lie" => Some(Method::Lie),
            "rk4" => Some(Method::Rk4),
            _ => None,
        }
    }
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// A sampled solution curve tagged with its producer.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionProfile {
    /// Producer of the samples.
    pub method: Method,
    /// The perturbation strength the profile was computed at.
    pub eps: Epsilon,
    /// (x, u) pairs with strictly increasing x covering [0, 1].
    pub samples: Vec<(f64, f64)>,
}

/// One classical RK4 step of the fin system u' = v, v' = eps * u^4.
fn fin_step(s: IvpState, h: f64, e: f64) -> IvpState {
    let accel = |u: f64| e * u.powi(4);
    let (k1u, k1v) = (s.v, accel(s.u));
    let (k2u, k2v) = (s.v + 0.5 * h * k1v, accel(s.u + 0.5 * h * k1u));
    let (k3u, k3v) = (s.v + 0.5 * h * k2v, accel(s.u + 0.5 * h * k2u));
    let (k4u, k4v) = (s.v + h * k3v, accel(s.u + h * k3u));
    IvpState {
        x: s.x + h,
        u: s.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
        v: s.v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v),
    }
}

fn check_steps(steps: usize) -> Result<()> {
    if steps < 10 {
        return Err(Error::Domain {
            what: "reference integration needs at least 10 steps",
            value: steps as f64,
        });
    }
    Ok(())
}

/// Integrates the radiating fin from the insulated tip, u(0) = u0 and
/// u'(0) = 0, across [0, 1] with `steps` fixed RK4 steps, sampling after
/// every step (steps + 1 samples including x = 0).
pub fn rk4_model2(u0: f64, eps: Epsilon, steps: usize) -> Result<SolutionProfile> {
    if !(u0.is_finite() && u0 > 0.0) {
        return Err(Error::Domain {
            what: "fin seed u0 must be positive",
            value: u0,
        });
    }
    check_steps(steps)?;
    let e = eps.get();
    let h = 1.0 / steps as f64;
    let mut state = IvpState { x: 0.0, u: u0, v: 0.0 };
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push((0.0, u0));
    for i in 0..steps {
        state = fin_step(state, h, e);
        // Recompute x by division so the final sample lands exactly on 1.
        state.x = (i + 1) as f64 / steps as f64;
        samples.push((state.x, state.u));
    }
    Ok(SolutionProfile {
        method: Method::Rk4,
        eps,
        samples,
    })
}

/// Endpoint value u(1) of the fin integration, without sampling.
fn fin_endpoint(u0: f64, e: f64, steps: usize) -> f64 {
    let h = 1.0 / steps as f64;
    let mut state = IvpState { x: 0.0, u: u0, v: 0.0 };
    for _ in 0..steps {
        state = fin_step(state, h, e);
    }
    state.u
}

/// Finds the fin tip temperature u0 whose RK4 trajectory meets
/// u(1) = 1, by bracketed root finding on (1e-6, 1]; fully independent
/// of the series path.
pub fn rk4_shoot_model2(eps: Epsilon, steps: usize, tol: f64) -> Result<f64> {
    if eps.get() <= 0.0 {
        return Err(Error::Domain {
            what: "shooting requires a positive epsilon",
            value: eps.get(),
        });
    }
    check_steps(steps)?;
    let e = eps.get();
    let mismatch = |u0: f64| fin_endpoint(u0, e, steps) - 1.0;
    let r = numerics::find_root(mismatch, Bracket { lo: 1e-6, hi: 1.0 }, tol)?;
    Ok(r.root)
}

/// Integrates the lumped cooling law u' = -u / (1 + eps u) from
/// u(0) = 1 across [0, 1] with `steps` fixed RK4 steps, sampling after
/// every step. Admits the linear limit [`Epsilon::ZERO`].
pub fn rk4_model3(eps: Epsilon, steps: usize) -> Result<SolutionProfile> {
    check_steps(steps)?;
    let e = eps.get();
    let h = 1.0 / steps as f64;
    let rate = |u: f64| -u / (1.0 + e * u);
    let mut u = 1.0;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push((0.0, u));
    for i in 0..steps {
        let k1 = rate(u);
        let k2 = rate(u + 0.5 * h * k1);
        let k3 = rate(u + 0.5 * h * k2);
        let k4 = rate(u + h * k3);
        u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        samples.push(((i + 1) as f64 / steps as f64, u));
    }
    Ok(SolutionProfile {
        method: Method::Rk4,
        eps,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps(v: f64) -> Epsilon {
        Epsilon::new(v).unwrap()
    }

    #[test]
    fn method_labels_round_trip() {
        for m in [
            Method::Exact,
            Method::Taylor,
            Method::Virial,
            Method::Hypervirial,
            Method::Lie,
            Method::Rk4,
        ] {
            assert_eq!(Method::parse_label(m.label()), Some(m));
        }
        assert_eq!(Method::parse_label("euler"), None);
    }

    #[test]
    fn fin_integration_linear_limit_is_constant() {
        let p = rk4_model2(0.8, Epsilon::ZERO, 100).unwrap();
        assert_eq!(p.samples.len(), 101);
        for &(_, u) in &p.samples {
            assert_eq!(u, 0.8);
        }
    }

    #[test]
    fn fin_sample_grid_is_exact() {
        let p = rk4_model2(0.8, eps(0.7), 100).unwrap();
        assert_eq!(p.samples[0].0, 0.0);
        assert_eq!(p.samples[100].0, 1.0);
        assert_eq!(p.samples[50].0, 0.5);
    }

    #[test]
    fn fin_reference_seed_reaches_far_boundary() {
        let p = rk4_model2(0.8186424785, eps(0.7), DEFAULT_STEPS).unwrap();
        let (x1, u1) = *p.samples.last().unwrap();
        assert_eq!(x1, 1.0);
        assert!((u1 - 1.0).abs() < 1e-8, "u(1) = {u1}");
    }

    #[test]
    fn fin_profiles_are_nondecreasing_and_convex() {
        let p = rk4_model2(0.9, eps(1.0), 1000).unwrap();
        for pair in p.samples.windows(2) {
            assert!(pair[1].1 >= pair[0].1, "profile decreased at {}", pair[1].0);
        }
        for triple in p.samples.windows(3) {
            let dd = triple[2].1 - 2.0 * triple[1].1 + triple[0].1;
            assert!(dd >= -1e-12, "second difference {dd} at {}", triple[1].0);
        }
    }

    #[test]
    fn fin_integration_shows_fourth_order_convergence() {
        let e = 0.7;
        let u0 = 0.8;
        // Step counts coarse enough that truncation error stays well
        // above the rounding floor of the endpoint value.
        let reference = fin_endpoint(u0, e, 200_000);
        let mut errs = Vec::new();
        for steps in [25usize, 50, 100, 200] {
            errs.push((fin_endpoint(u0, e, steps) - reference).abs());
        }
        for pair in errs.windows(2) {
            let ratio = pair[0] / pair[1];
            assert!(
                (8.0..32.0).contains(&ratio),
                "halving error ratio {ratio} outside the fourth-order window"
            );
        }
    }

    #[test]
    fn fin_shooting_matches_series_reference() {
        let u0 = rk4_shoot_model2(eps(0.7), DEFAULT_STEPS, 1e-10).unwrap();
        assert!((u0 - 0.8186424785).abs() < 1e-8, "u0 = {u0}");
    }

    #[test]
    fn fin_shooting_rejects_linear_limit() {
        assert!(matches!(
            rk4_shoot_model2(Epsilon::ZERO, 1000, 1e-10),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn cooling_integration_linear_limit_matches_exponential() {
        let p = rk4_model3(Epsilon::ZERO, 1000).unwrap();
        for &(x, u) in p.samples.iter().step_by(100) {
            assert!((u - (-x).exp()).abs() < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn cooling_integration_satisfies_implicit_law() {
        for e in [0.2, 0.7, 2.0] {
            let p = rk4_model3(eps(e), DEFAULT_STEPS).unwrap();
            assert_eq!(p.samples[0], (0.0, 1.0));
            let mut worst = 0.0f64;
            for &(x, u) in &p.samples {
                let g = (u.ln() + e * (u - 1.0) + x).abs();
                worst = worst.max(g);
            }
            assert!(worst < 1e-7, "eps = {e}: worst implicit residual {worst}");
        }
    }

    #[test]
    fn integrators_reject_too_few_steps() {
        assert!(matches!(
            rk4_model2(0.8, eps(0.7), 9),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(rk4_model3(eps(0.7), 0), Err(Error::Domain { .. })));
    }
}
