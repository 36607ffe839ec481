//! Cosh trial-function fits for the radiating fin, driven by the
//! integral identity
//!
//! ```text
//! w(u(1)) u'(1) - w(u(0)) u'(0) = integral_0^1 [w'(u) (u')^2 + w(u) f(u)] dx
//! ```
//!
//! which holds along any solution of `u'' = f(u)` for any differentiable
//! weight w. Inserting the trial `u_app(x) = cosh(b x) / cosh(b)` (which
//! satisfies both fin boundary conditions for every b) with
//! `f(u) = eps * u^4` and demanding the identity hold pins the single
//! parameter b.
//!
//! Two grouped closed forms in `(b, exp(2b))` for the resulting
//! equations, one per weight, are evaluated here exactly as printed in
//! their source. [`residual_quadrature`] evaluates the identity itself by
//! quadrature and is the independent check on them. The `w(u) = u` form
//! passes that check: it is a constant multiple of the quadrature
//! residual, so the two share roots to machine precision. The `w(u) = 1`
//! form does not: its positive root leaves an identity residual of order
//! 1e-2 (see the tests), so where the two paths disagree, the quadrature
//! value is the authoritative one.

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::models::Epsilon;
use crate::numerics::{self, DEFAULT_QUAD_TOL};

/// Scan floor for the fit, chosen to step over the trivial root b = 0.
const FIT_B_MIN: f64 = 0.01;
/// Default scan ceiling for the fit.
const FIT_B_MAX: f64 = 10.0;
/// Default number of scan points for the fit.
const FIT_SCAN_POINTS: usize = 500;
/// Largest b accepted by the closed forms; exp(10 b) overflows soon after.
const CLOSED_FORM_B_LIMIT: f64 = 80.0;

/// Weight function selector for the integral identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightChoice {
    /// `w(u) = u`.
    Virial,
    /// `w(u) = 1`.
    Hypervirial,
}

/// A converged trial-function fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnsatzFit {
    /// Which weight's closed form was rooted.
    pub weight: WeightChoice,
    /// The perturbation strength the fit ran at.
    pub eps: Epsilon,
    /// Fitted trial parameter: the smallest positive root of the closed
    /// form.
    pub b: f64,
    /// Estimated tip temperature `u_app(0) = 1 / cosh(b)`.
    pub u0_app: f64,
    /// Closed-form value at the fitted b. Diagnostic only: the form
    /// scales like `exp(10 b)`, so judge this against the local slope,
    /// not against zero.
    pub closed_residual: f64,
    /// Integral-identity residual at the fitted b, by quadrature.
    pub quad_residual: f64,
}

/// The trial profile `cosh(b x) / cosh(b)`; satisfies `u_app(1) = 1` and
/// `u_app'(0) = 0` identically, for every b. Even in b, so negative b
/// adds nothing.
pub fn u_app(x: f64, b: f64) -> f64 {
    (b * x).cosh() / b.cosh()
}

/// Slope of the trial profile, `b sinh(b x) / cosh(b)`.
pub fn u_app_deriv(x: f64, b: f64) -> f64 {
    b * (b * x).sinh() / b.cosh()
}

/// Evaluates the grouped closed form for the chosen weight at `(b, eps)`,
/// exactly as printed in its source.
///
/// Both forms vanish identically at b = 0 (the trivial root); the
/// physical fit is their smallest strictly positive root. Values grow
/// like `exp(10 b)`, so `b > 80` is rejected as an overflow before any
/// non-finite intermediate can appear.
pub fn residual_closed(b: f64, eps: Epsilon, w: WeightChoice) -> Result<f64> {
    if !(b.is_finite() && b >= 0.0) {
        return Err(Error::Domain {
            what: "trial parameter b must be nonnegative",
            value: b,
        });
    }
    if b > CLOSED_FORM_B_LIMIT {
        return Err(Error::Overflow { value: b });
    }
    let e = eps.get();
    let q = (2.0 * b).exp();
    let q2 = q * q;
    let q3 = q2 * q;
    let q4 = q2 * q2;
    let q5 = q4 * q;
    let b2 = b * b;
    let b3 = b2 * b;
    let r = match w {
        WeightChoice::Virial => {
            3.0 * q5 * (5.0 * b2 - 2.0 * e)
                + 5.0 * q4 * (12.0 * b3 + 9.0 * b2 - 10.0 * e)
                + 30.0 * q3 * (6.0 * b3 + b2 - 10.0 * e)
                + 30.0 * q2 * (6.0 * b3 - b2 + 10.0 * e)
                + 5.0 * q * (12.0 * b3 - 9.0 * b2 + 10.0 * e)
                - 3.0 * (5.0 * b2 - 2.0 * e)
        }
        WeightChoice::Hypervirial => {
            3.0 * q5 * (5.0 * b2 - e)
                + 5.0 * q4 * (9.0 * b2 - 5.0 * e)
                + 30.0 * q3 * (b2 - 5.0 * e)
                + 30.0 * q2 * (5.0 * e - b2)
                + 5.0 * q * (5.0 * e - 9.0 * b2)
                - 3.0 * (5.0 * b2 - e)
        }
    };
    Ok(r)
}

/// Evaluates the integral identity directly for the cosh trial:
/// `w(1) u_app'(1) - integral_0^1 [w'(u_app) (u_app')^2 + eps w(u_app) u_app^4] dx`
/// (the `u_app'(0)` boundary term vanishes identically).
///
/// This is the independent cross-check for [`residual_closed`]:
/// agreement of roots means the closed form really reduces the identity
/// for that weight.
pub fn residual_quadrature(b: f64, eps: Epsilon, w: WeightChoice, tol: f64) -> Result<f64> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::Domain {
            what: "quadrature residual needs b > 0",
            value: b,
        });
    }
    let e = eps.get();
    let integrand = |x: f64| {
        let u = u_app(x, b);
        let u4 = u.powi(4);
        match w {
            WeightChoice::Virial => {
                let du = u_app_deriv(x, b);
                du * du + e * u * u4
            }
            WeightChoice::Hypervirial => e * u4,
        }
    };
    let integral = numerics::integrate(integrand, 0.0, 1.0, tol)?;
    let boundary = match w {
        WeightChoice::Virial => u_app(1.0, b) * u_app_deriv(1.0, b),
        WeightChoice::Hypervirial => u_app_deriv(1.0, b),
    };
    Ok(boundary - integral)
}

/// Fits the trial parameter for one weight: the smallest strictly
/// positive root of that weight's closed form, located by a 500-point
/// scan of `(0.01, 10]` and polished to `tol`.
///
/// `tol` acts on the bracket width in b (the closed forms scale like
/// `exp(10 b)`, so their magnitude cannot be driven to a fixed
/// tolerance); the returned b is accurate to machine precision.
pub fn fit(eps: Epsilon, w: WeightChoice, tol: f64) -> Result<AnsatzFit> {
    fit_scanned(eps, w, tol, FIT_B_MAX, FIT_SCAN_POINTS)
}

/// [`fit`] with an explicit scan ceiling and resolution; the fitted root
/// must not depend on either as long as the scan still resolves it.
pub fn fit_scanned(
    eps: Epsilon,
    w: WeightChoice,
    tol: f64,
    b_max: f64,
    n_scan: usize,
) -> Result<AnsatzFit> {
    if eps.get() <= 0.0 {
        return Err(Error::Domain {
            what: "fitting requires a positive epsilon",
            value: eps.get(),
        });
    }
    let f = |b: f64| match residual_closed(b, eps, w) {
        Ok(v) => v,
        Err(_) => f64::NAN,
    };
    let brackets = numerics::find_brackets(f, FIT_B_MIN, b_max, n_scan)?;
    let bracket = *brackets.first().ok_or(Error::NoBracket {
        lo: FIT_B_MIN,
        hi: b_max,
    })?;
    let r = numerics::find_root(f, bracket, tol)?;
    let b = r.root;
    let quad_residual = residual_quadrature(b, eps, w, DEFAULT_QUAD_TOL)?;
    Ok(AnsatzFit {
        weight: w,
        eps,
        b,
        u0_app: 1.0 / b.cosh(),
        closed_residual: r.residual,
        quad_residual,
    })
}

/// The identity residual for an arbitrary right-hand side f of
/// `u'' = f(u)`, weight `w` with derivative `w_deriv`, and a
/// parametrized trial curve:
/// `w(u(1)) u'(1) - w(u(0)) u'(0) - integral_0^1 [w'(u) (u')^2 + w(u) f(u)] dx`.
///
/// Zero (to quadrature accuracy) whenever the trial solves `u'' = f(u)`
/// exactly, whatever the weight. With `f(u) = eps * u^4` and the cosh
/// trial, this reduces to [`residual_quadrature`].
pub fn general_hypervirial_residual<P, F, W, WD, T, TD>(
    f: F,
    w: W,
    w_deriv: WD,
    trial: T,
    trial_deriv: TD,
    params: &P,
    tol: f64,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
    W: Fn(f64) -> f64,
    WD: Fn(f64) -> f64,
    T: Fn(f64, &P) -> f64,
    TD: Fn(f64, &P) -> f64,
{
    let u0 = trial(0.0, params);
    let u1 = trial(1.0, params);
    let du0 = trial_deriv(0.0, params);
    let du1 = trial_deriv(1.0, params);
    let integrand = |x: f64| {
        let u = trial(x, params);
        let du = trial_deriv(x, params);
        w_deriv(u) * du * du + w(u) * f(u)
    };
    let integral = numerics::integrate(integrand, 0.0, 1.0, tol)?;
    Ok(w(u1) * du1 - w(u0) * du0 - integral)
}
