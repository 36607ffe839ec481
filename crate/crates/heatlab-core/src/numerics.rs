//! Scalar bracketed root finding and adaptive quadrature.
//!
//! All routines are deterministic for identical inputs and propagate
//! non-finite function values as [`Error::NonFinite`] with the abscissa
//! at which the evaluation failed.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Default absolute tolerance for root finding.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
/// Default absolute tolerance for quadrature.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Iteration cap for [`find_root`]; a forced bisection every other step
/// makes the cap unreachable for any representable bracket, so hitting it
/// signals a defect rather than a hard problem.
const MAX_ROOT_ITERATIONS: usize = 200;
/// Recursion depth cap for [`integrate`].
const MAX_SPLIT_DEPTH: u32 = 64;

/// An interval whose endpoints give the target function opposite,
/// nonzero signs, so it contains at least one root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    /// Lower endpoint (`lo < hi`).
    pub lo: f64,
    /// Upper endpoint.
    pub hi: f64,
}

/// Converged output of [`find_root`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    /// Location of the root, inside the original bracket.
    pub root: f64,
    /// Function value at `root`. Within the requested tolerance whenever
    /// the function is resolvable that finely in double precision;
    /// otherwise as small as rounding at the root permits.
    pub residual: f64,
    /// Number of function refinements performed.
    pub iterations: usize,
}

fn eval<F>(f: &F, x: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { x })
    }
}

/// Scans `[lo, hi]` with a uniform `n_scan`-point grid and returns every
/// subinterval across which `f` changes sign, in increasing order.
///
/// Grid points where `f` is exactly zero are skipped, so a root landing
/// on the grid is reported through the bracket joining its signed
/// neighbors instead of producing a degenerate interval. An empty list
/// means no sign change was seen at this resolution.
pub fn find_brackets<F>(f: F, lo: f64, hi: f64, n_scan: usize) -> Result<Vec<Bracket>>
where
    F: Fn(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain {
            what: "scan interval must be finite with lo < hi",
            value: hi - lo,
        });
    }
    if n_scan < 2 {
        return Err(Error::Domain {
            what: "scan needs at least two points",
            value: n_scan as f64,
        });
    }
    let mut brackets = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for i in 0..n_scan {
        let x = if i + 1 == n_scan {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (n_scan - 1) as f64
        };
        let y = eval(&f, x)?;
        if y == 0.0 {
            continue;
        }
        if let Some((px, py)) = last {
            if (py < 0.0) != (y < 0.0) {
                brackets.push(Bracket { lo: px, hi: x });
            }
        }
        last = Some((x, y));
    }
    Ok(brackets)
}

/// Width below which an interval near (`a`, `b`) cannot be meaningfully
/// subdivided in double precision.
fn width_floor(a: f64, b: f64) -> f64 {
    4.0 * f64::EPSILON * a.abs().max(b.abs()) + 4.0 * f64::MIN_POSITIVE
}

/// Hybrid secant/bisection search for a root of `f` inside `bracket`.
///
/// Secant steps give fast local convergence; whenever a step would leave
/// the bracket or the bracket has not halved over the last two steps, a
/// bisection step is forced, so the width always contracts. Convergence
/// is declared when `|f(x)| <= tol`, or when the bracket collapses to
/// machine resolution (then the endpoint with the smaller `|f|` is
/// returned, which matters for steep functions whose values cannot reach
/// `tol` on a grid of doubles).
pub fn find_root<F>(f: F, bracket: Bracket, tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> f64,
{
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain {
            what: "tolerance must be finite and positive",
            value: tol,
        });
    }
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidBracket { lo: a, hi: b });
    }
    let mut fa = eval(&f, a)?;
    let mut fb = eval(&f, b)?;
    if fa == 0.0 || fb == 0.0 || (fa < 0.0) == (fb < 0.0) {
        return Err(Error::InvalidBracket { lo: a, hi: b });
    }
    let mut width_two_ago = f64::INFINITY;
    let mut prev_width = f64::INFINITY;
    for iteration in 1..=MAX_ROOT_ITERATIONS {
        let width = b - a;
        let mid = a + 0.5 * width;
        let secant = b - fb * width / (fb - fa);
        let stalled = width > 0.5 * width_two_ago;
        let x = if !stalled && secant.is_finite() && secant > a && secant < b {
            secant
        } else {
            mid
        };
        if width <= width_floor(a, b) || x <= a || x >= b {
            let (root, residual) = if fa.abs() <= fb.abs() { (a, fa) } else { (b, fb) };
            return Ok(RootResult {
                root,
                residual,
                iterations: iteration - 1,
            });
        }
        let fx = eval(&f, x)?;
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if fx == 0.0 || fx.abs() <= tol {
            return Ok(RootResult {
                root: x,
                residual: fx,
                iterations: iteration,
            });
        }
        width_two_ago = prev_width;
        prev_width = b - a;
    }
    Err(Error::NoConvergence {
        iterations: MAX_ROOT_ITERATIONS,
    })
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute accuracy
/// `tol`.
///
/// A panel is accepted when refining it into two halves moves the
/// estimate by at most fifteen times its local error budget (the
/// standard interval-halving control for Simpson's rule); the accepted
/// value includes the extrapolated correction. The degenerate interval
/// `a == b` integrates to zero.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain {
            what: "integration endpoints must be finite",
            value: if a.is_finite() { b } else { a },
        });
    }
    if a > b {
        return Err(Error::Domain {
            what: "integration interval must satisfy a <= b",
            value: b - a,
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain {
            what: "tolerance must be finite and positive",
            value: tol,
        });
    }
    if a == b {
        return Ok(0.0);
    }
    let fa = eval(&f, a)?;
    let fb = eval(&f, b)?;
    let m = a + 0.5 * (b - a);
    let fm = eval(&f, m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    split(&f, a, fa, m, fm, b, fb, whole, tol, 0)
}

#[allow(clippy::too_many_arguments)]
fn split<F>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let lm = a + 0.25 * (b - a);
    let rm = b - 0.25 * (b - a);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    if (refined - whole).abs() <= 15.0 * tol {
        return Ok(refined + (refined - whole) / 15.0);
    }
    if depth >= MAX_SPLIT_DEPTH {
        return Err(Error::NoConvergence {
            iterations: depth as usize,
        });
    }
    let half_tol = 0.5 * tol;
    Ok(split(f, a, fa, lm, flm, m, fm, left, half_tol, depth + 1)?
        + split(f, m, fm, rm, frm, b, fb, right, half_tol, depth + 1)?)
}
