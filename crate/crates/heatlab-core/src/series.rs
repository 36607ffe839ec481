//! Truncated power-series engine: coefficient recurrences for the two
//! boundary-value models, shooting on the partial sums, and a ratio-test
//! estimate of the convergence radius.
//!
//! Both models admit a Taylor expansion about x = 0 whose coefficients
//! follow from a finite recurrence once the free initial datum is fixed:
//! the tip temperature `u(0)` for the radiating fin, the hot-face slope
//! `u'(0)` for the conducting slab. Shooting adjusts that datum until the
//! partial sum meets the far boundary condition at x = 1.

use alloc::vec;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::models::Epsilon;
use crate::numerics::{self, Bracket};

/// Number of scan points used to isolate the physical slope when
/// shooting the conducting slab.
const SLAB_SCAN_POINTS: usize = 101;
/// Default truncation order for series work.
pub const DEFAULT_ORDER: usize = 30;

/// A Taylor polynomial about x = 0; entry `j` is the coefficient of x^j.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl PowerSeries {
    /// Wraps a coefficient vector (lowest power first). Rejects empty
    /// vectors and non-finite entries.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain {
                what: "a series needs at least one coefficient",
                value: 0.0,
            });
        }
        for (j, &c) in coeffs.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::Domain {
                    what: "series coefficients must be finite; first bad index",
                    value: j as f64,
                });
            }
        }
        Ok(Self { coeffs })
    }

    /// Truncation order N, the highest represented power.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^j; zero beyond the truncation order.
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    /// All coefficients, lowest power first.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }
}

/// Converged boundary-shooting outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootingResult {
    /// The solved initial datum: `u(0)` for the fin, `u'(0)` for the slab.
    pub free_param: f64,
    /// Truncation order of the series shot with.
    pub order: usize,
    /// Far-boundary mismatch of the partial sum at the solution.
    pub boundary_residual: f64,
    /// The series rebuilt from the converged datum.
    pub series: PowerSeries,
}

/// Coefficient-level product of two series, truncated at the smaller of
/// the two orders (higher cross terms would be incomplete).
pub fn cauchy_product(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let n = a.order().min(b.order());
    let mut coeffs = vec![0.0; n + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        let mut acc = 0.0;
        for j in 0..=k {
            acc += a.coeff(j) * b.coeff(k - j);
        }
        *c = acc;
    }
    PowerSeries { coeffs }
}

/// Horner evaluation of the partial sum at x.
pub fn series_eval(s: &PowerSeries, x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in s.coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Coefficient-level derivative, one order lower than the input; a
/// constant series differentiates to the zero constant series.
pub fn series_derivative(s: &PowerSeries) -> PowerSeries {
    if s.order() == 0 {
        return PowerSeries { coeffs: vec![0.0] };
    }
    let mut coeffs = vec![0.0; s.order()];
    for (k, c) in coeffs.iter_mut().enumerate() {
        *c = (k + 1) as f64 * s.coeff(k + 1);
    }
    PowerSeries { coeffs }
}

/// Series solution of the radiating fin, `u'' = eps * u^4`, with
/// `u(0) = u0` and `u'(0) = 0`, through order `order`.
///
/// Order n of `u^4` is the double convolution `(u*u)*(u*u)` and involves
/// only coefficients up to index n, so
/// `u[n+2] = eps * (u^4)[n] / ((n+1)(n+2))` closes the recurrence. The
/// insulated tip forces `u[1] = 0`, and the recurrence then keeps every
/// odd coefficient at exactly zero.
pub fn model2_coeffs(u0: f64, eps: Epsilon, order: usize) -> Result<PowerSeries> {
    if !(u0.is_finite() && u0 > 0.0) {
        return Err(Error::Domain {
            what: "fin series seed u0 must be positive",
            value: u0,
        });
    }
    if order < 2 {
        return Err(Error::Domain {
            what: "series order must be at least 2",
            value: order as f64,
        });
    }
    let e = eps.get();
    let mut u = vec![0.0; order + 1];
    let mut usq = vec![0.0; order + 1];
    u[0] = u0;
    for n in 0..=(order - 2) {
        let mut sq = 0.0;
        for i in 0..=n {
            sq += u[i] * u[n - i];
        }
        usq[n] = sq;
        let mut quart = 0.0;
        for k in 0..=n {
            quart += usq[k] * usq[n - k];
        }
        u[n + 2] = e * quart / (((n + 1) * (n + 2)) as f64);
    }
    Ok(PowerSeries { coeffs: u })
}

/// Series solution of the conducting slab,
/// `(1 + eps*u) u'' + eps*(u')^2 = 0`, with `u(0) = 1` and
/// `u'(0) = slope`, through order `order`.
///
/// Writing `w[n] = (n+1)(n+2) u[n+2]` for the coefficients of `u''`,
/// order n of the equation reads
/// `(1 + eps) w[n] + eps * (sum_{k=1..n} u[k] w[n-k] + ((u')^2)[n]) = 0`,
/// and every term on the right involves only coefficients of index at
/// most n + 1, so `w[n]` (hence `u[n+2]`) is determined.
pub fn model1_coeffs(slope: f64, eps: Epsilon, order: usize) -> Result<PowerSeries> {
    if !slope.is_finite() {
        return Err(Error::Domain {
            what: "slab series slope must be finite",
            value: slope,
        });
    }
    if order < 2 {
        return Err(Error::Domain {
            what: "series order must be at least 2",
            value: order as f64,
        });
    }
    let e = eps.get();
    let mut u = vec![0.0; order + 1];
    let mut w = vec![0.0; order - 1];
    u[0] = 1.0;
    u[1] = slope;
    for n in 0..=(order - 2) {
        let mut conv = 0.0;
        for k in 1..=n {
            conv += u[k] * w[n - k];
        }
        let mut dsq = 0.0;
        for j in 0..=n {
            dsq += ((j + 1) as f64 * u[j + 1]) * ((n - j + 1) as f64 * u[n - j + 1]);
        }
        let wn = -(e * (conv + dsq)) / (1.0 + e);
        w[n] = wn;
        u[n + 2] = wn / (((n + 1) * (n + 2)) as f64);
    }
    Ok(PowerSeries { coeffs: u })
}

/// Solves `u(1) = 1` for the tip temperature `u0` of the fin series.
///
/// The partial sum at x = 1 is strictly increasing in `u0` (every
/// coefficient is a polynomial in `u0` with nonnegative coefficients),
/// sits below the target at `u0 = 1e-6`, and reaches at least 1 at
/// `u0 = 1`, so `(1e-6, 1]` brackets the unique physical root.
pub fn shoot_model2(eps: Epsilon, order: usize, tol: f64) -> Result<ShootingResult> {
    if eps.get() <= 0.0 {
        return Err(Error::Domain {
            what: "shooting requires a positive epsilon",
            value: eps.get(),
        });
    }
    if order < 4 {
        return Err(Error::Domain {
            what: "shooting needs series order at least 4",
            value: order as f64,
        });
    }
    let mismatch = |u0: f64| match model2_coeffs(u0, eps, order) {
        Ok(s) => series_eval(&s, 1.0) - 1.0,
        Err(_) => f64::NAN,
    };
    let r = numerics::find_root(mismatch, Bracket { lo: 1e-6, hi: 1.0 }, tol)?;
    let series = model2_coeffs(r.root, eps, order)?;
    Ok(ShootingResult {
        free_param: r.root,
        order,
        boundary_residual: r.residual,
        series,
    })
}

/// Solves `u(1) = 0` for the hot-face slope of the slab series.
///
/// The partial sum at x = 1 equals 1 at slope 0 and is scanned down to
/// `-(2 + eps)/2 - 1`, a range that always contains the physical slope
/// `-(2 + eps)/(2 (1 + eps))`. Slopes steep enough to push x = 1 outside
/// the series' disc of convergence make the partial sum oscillate, which
/// can produce spurious scan crossings below the physical one; the
/// rightmost bracket is therefore the one rooted, being the first
/// crossing reached from the convergent side.
pub fn shoot_model1(eps: Epsilon, order: usize, tol: f64) -> Result<ShootingResult> {
    if eps.get() <= 0.0 {
        return Err(Error::Domain {
            what: "shooting requires a positive epsilon",
            value: eps.get(),
        });
    }
    if order < 4 {
        return Err(Error::Domain {
            what: "shooting needs series order at least 4",
            value: order as f64,
        });
    }
    let lo = -(2.0 + eps.get()) / 2.0 - 1.0;
    let hi = -1e-9;
    let boundary = |slope: f64| match model1_coeffs(slope, eps, order) {
        Ok(s) => series_eval(&s, 1.0),
        Err(_) => f64::NAN,
    };
    let brackets = numerics::find_brackets(&boundary, lo, hi, SLAB_SCAN_POINTS)?;
    let bracket = *brackets.last().ok_or(Error::NoBracket { lo, hi })?;
    let r = numerics::find_root(&boundary, bracket, tol)?;
    let series = model1_coeffs(r.root, eps, order)?;
    Ok(ShootingResult {
        free_param: r.root,
        order,
        boundary_residual: r.residual,
        series,
    })
}

/// Ratio-test estimate of the convergence radius from the trailing
/// coefficients of a series.
///
/// When the tail carries both parities, the last three consecutive
/// ratios `|u[n] / u[n+1]|` are averaged to damp odd/even alternation.
/// When only one parity class is populated (as for the fin, whose odd
/// coefficients vanish identically), the stride-two ratios
/// `sqrt(|u[n] / u[n+2]|)` are used instead. Either way the estimate
/// needs at least six consecutive nonzero coefficients in its class.
pub fn radius_estimate(s: &PowerSeries) -> Result<f64> {
    let c = s.coeffs();
    let last = match c.iter().rposition(|&v| v != 0.0) {
        Some(j) => j,
        None => return Err(Error::TooFewCoefficients { have: 0, need: 6 }),
    };
    let mut run1 = 1;
    while run1 <= last && c[last - run1] != 0.0 {
        run1 += 1;
    }
    if run1 >= 6 {
        let mut acc = 0.0;
        for i in 0..3 {
            let n = last - 1 - i;
            acc += (c[n] / c[n + 1]).abs();
        }
        return Ok(acc / 3.0);
    }
    let mut run2 = 1;
    while 2 * run2 <= last && c[last - 2 * run2] != 0.0 {
        run2 += 1;
    }
    if run2 >= 6 {
        let mut acc = 0.0;
        for i in 0..3 {
            let n = last - 2 - 2 * i;
            acc += (c[n] / c[n + 2]).abs().sqrt();
        }
        return Ok(acc / 3.0);
    }
    Err(Error::TooFewCoefficients {
        have: run1.max(run2),
        need: 6,
    })
}
