//! The state-space metric: p-adic valuations, Pythagorean primes, the
//! Cantor digit model and its planar embedding.

mod cantor;
mod metric;
mod primes;
mod valuation;

pub use cantor::{cantor_embed, CantorGeometry, CantorPoint, DEFAULT_DEPTH};
pub use metric::{gp_distance, Distance, StateSpacePoint};
pub use primes::{is_prime, is_pythagorean_prime, PythagoreanPrime, Valuation};
pub use valuation::{padic_norm, padic_valuation};
