//! Failure type shared by every solver in the crate.

use core::fmt;

/// What can go wrong in bracketing, root finding, quadrature, series
/// construction, and model evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A function evaluation produced NaN or an infinity at abscissa `x`.
    NonFinite { x: f64 },
    /// The supplied interval does not straddle a sign change.
    InvalidBracket { lo: f64, hi: f64 },
    /// The iteration or recursion cap was reached before convergence.
    NoConvergence { iterations: usize },
    /// A scan over `[lo, hi]` found no sign change to bracket.
    NoBracket { lo: f64, hi: f64 },
    /// An argument lies outside the domain of the operation; `what` names
    /// the violated requirement and `value` is the offending number.
    Domain { what: &'static str, value: f64 },
    /// A closed-form expression is singular at abscissa `x`.
    Singular { x: f64 },
    /// An argument is large enough to overflow the expression it feeds.
    Overflow { value: f64 },
    /// A series has too few usable coefficients for the requested estimate.
    TooFewCoefficients { have: usize, need: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { x } => {
                write!(f, "function value is not finite at x = {x:e}")
            }
            Error::InvalidBracket { lo, hi } => {
                write!(f, "[{lo:e}, {hi:e}] is not a sign-change bracket")
            }
            Error::NoConvergence { iterations } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::NoBracket { lo, hi } => {
                write!(f, "no sign change found in [{lo:e}, {hi:e}]")
            }
            Error::Domain { what, value } => write!(f, "{what} (got {value:e})"),
            Error::Singular { x } => write!(f, "expression is singular at x = {x:e}"),
            Error::Overflow { value } => {
                write!(f, "argument {value:e} would overflow the expression")
            }
            Error::TooFewCoefficients { have, need } => {
                write!(f, "need {need} usable coefficients, have {have}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
