//! Solver laboratory for three nonlinear heat-transfer models: a
//! conducting slab with temperature-dependent conductivity, a radiating
//! fin, and a lumped cooling law.
//!
//! Four independent solution paths cross-validate each other: closed and
//! implicit forms ([`models`]), truncated Taylor series with boundary
//! shooting ([`series`]), cosh trial functions fitted through integral
//! identities ([`ansatz`]), and fixed-step RK4 references ([`oracle`]).
//! [`numerics`] carries the shared bracketed root finding and adaptive
//! quadrature.
//!
//! Everything here is a pure function of its arguments: no globals, no
//! interior mutability, identical outputs for identical inputs. The crate
//! builds without `std` (it needs `alloc` for coefficient vectors and
//! sampled profiles); the default `std` feature switches float math to
//! the std intrinsics and implements `std::error::Error` for [`Error`].
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod ansatz;
mod error;
pub mod models;
pub mod numerics;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
