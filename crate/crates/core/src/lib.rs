//! Exact arithmetic for CHSH correlations on rational descriptor grids.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact_arith`]: reduced fractions, angles that are rational multiples
//!   of π, minimal polynomials of cosines and the spherical third-side
//!   classifier.
//! - [`padic_geometry`]: p-adic valuations, Pythagorean primes, the Cantor
//!   digit model and the two-regime state-space metric.
//! - [`hilbert`]: descriptor `(n₁, n₂, N)` to qubit-state correspondence.
//! - [`bell`]: CHSH evaluation with undefined slots, frame snapping and scans.
//! - [`ensemble`]: finite sub-ensemble realization of the correlations.

pub mod bell;
pub mod ensemble;
pub mod error;
pub mod exact_arith;
pub mod hilbert;
pub mod padic_geometry;

pub use error::{Error, Result};
pub use exact_arith::{CosClass, IntPolynomial, PiAngle, QuadraticValue, Rational};
