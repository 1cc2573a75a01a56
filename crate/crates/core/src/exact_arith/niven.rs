//! Rationality of `cos(aπ/b)`.
//!
//! `cos φ` is rational only at `0, ±1/2, ±1`. Every other rational multiple
//! of π gets its minimal polynomial as an irrationality witness.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::poly::{euler_phi, two_cos_minimal_polynomial};
use super::{IntPolynomial, PiAngle, QuadraticValue, Rational};
use crate::error::{Error, Result};

/// Largest root-of-unity order for which minimal polynomials are materialized.
pub const MINPOLY_ORDER_CAP: u64 = 4096;

/// Evidence that a cosine is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Irrationality {
    /// Algebraic degree over the rationals (an upper bound when `degree_is_bound`).
    pub degree: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub degree_is_bound: bool,
    /// Minimal polynomial (or, with `degree_is_bound`, an annihilating polynomial).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_poly: Option<IntPolynomial>,
}

/// Exact classification of a cosine value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CosClass {
    RationalCos(Rational),
    IrrationalCos(Irrationality),
}

impl CosClass {
    pub fn is_rational(&self) -> bool {
        matches!(self, CosClass::RationalCos(_))
    }

    pub fn rational(&self) -> Option<&Rational> {
        match self {
            CosClass::RationalCos(r) => Some(r),
            CosClass::IrrationalCos(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Irrationality> {
        match self {
            CosClass::RationalCos(_) => None,
            CosClass::IrrationalCos(w) => Some(w),
        }
    }
}

/// The doubling map on `2cos` values: `2cos 2φ = (2cos φ)² − 2`.
pub fn chebyshev_double(c: &Rational) -> Rational {
    c.square() - Rational::integer(2)
}

/// Exact `cos φ` for the angles where it is rational.
pub fn rational_cos(phi: &PiAngle) -> Option<Rational> {
    let (a, b) = (phi.numer(), phi.denom());
    // a ranges over residues mod 2b coprime to b (or a = 0).
    let v = match (b, a) {
        (1, 0) => Rational::one(),
        (1, 1) => -Rational::one(),
        (2, _) => Rational::zero(),
        (3, 1) | (3, 5) => Rational::frac(1, 2),
        (3, 2) | (3, 4) => Rational::frac(-1, 2),
        _ => return None,
    };
    Some(v)
}

/// Algebraic degree of `cos φ`: `φ(n)/2` for root-of-unity order `n >= 3`.
pub fn cos_degree(phi: &PiAngle) -> u64 {
    let n = phi.root_of_unity_order();
    if n <= 2 {
        1
    } else {
        euler_phi(n) / 2
    }
}

/// Minimal polynomial of `2cos φ` (monic, integer).
pub fn two_cos_minimal_polynomial_of(phi: &PiAngle) -> Result<IntPolynomial> {
    let n = phi.root_of_unity_order();
    if n > MINPOLY_ORDER_CAP {
        return Err(Error::DegreeCap {
            order: n,
            cap: MINPOLY_ORDER_CAP,
        });
    }
    IntPolynomial::from_ascending(two_cos_minimal_polynomial(n))
}

/// Minimal polynomial of `cos φ`, primitive with positive leading coefficient.
pub fn cos_minimal_polynomial(phi: &PiAngle) -> Result<IntPolynomial> {
    let two_cos = two_cos_minimal_polynomial_of(phi)?;
    // P(2x) has root cos φ.
    let scaled = two_cos
        .ascending()
        .iter()
        .enumerate()
        .map(|(i, c)| c << i)
        .collect();
    IntPolynomial::from_ascending(scaled)
}

pub fn niven_classify(phi: &PiAngle) -> CosClass {
    if let Some(v) = rational_cos(phi) {
        return CosClass::RationalCos(v);
    }
    CosClass::IrrationalCos(Irrationality {
        degree: cos_degree(phi),
        degree_is_bound: false,
        min_poly: cos_minimal_polynomial(phi).ok(),
    })
}

/// `cos φ` as `u + v√D` when it has degree at most two.
pub fn quadratic_cos(phi: &PiAngle) -> Result<Option<QuadraticValue>> {
    if let Some(v) = rational_cos(phi) {
        return Ok(Some(QuadraticValue::rational(v)));
    }
    if cos_degree(phi) != 2 {
        return Ok(None);
    }
    let p = cos_minimal_polynomial(phi)?;
    let c = p.ascending();
    let (c0, c1, c2) = (
        Rational::integer(c[0].clone()),
        Rational::integer(c[1].clone()),
        Rational::integer(c[2].clone()),
    );
    // Roots (−c1 ± √disc)/(2c2); pick the sign by ordering of the conjugate angles.
    let disc = c1.square() - Rational::integer(4) * &c0 * &c2;
    let two_c2 = Rational::integer(2) * &c2;
    let u = -(&c1 / &two_c2);
    let larger = is_larger_conjugate(phi);
    let sign = if larger { Rational::one() } else { -Rational::one() };
    let q1 = sign / &two_c2;
    // disc is an integer for integer coefficients.
    QuadraticValue::new(u, q1, disc.numer()).map(Some)
}

/// For a degree-2 cosine, whether `cos φ` is the larger of its two conjugates.
fn is_larger_conjugate(phi: &PiAngle) -> bool {
    let n = phi.root_of_unity_order();
    let folded = phi.folded();
    // folded = 2πk/n with 0 < k < n/2; the other conjugate uses the other such k.
    let k = folded.numer() * n / (2 * folded.denom());
    let other = (1..n.div_ceil(2))
        .find(|&j| j != k && num_integer::gcd(j, n) == 1)
        .expect("degree-2 cosine has two conjugates");
    // cos decreases on [0, π].
    k < other
}

/// Caller-owned memo of minimal polynomials keyed by root-of-unity order.
#[derive(Debug, Default)]
pub struct NivenClassifier {
    cache: HashMap<u64, Option<IntPolynomial>>,
}

impl NivenClassifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn classify(&mut self, phi: &PiAngle) -> CosClass {
        if let Some(v) = rational_cos(phi) {
            return CosClass::RationalCos(v);
        }
        let n = phi.root_of_unity_order();
        let min_poly = self
            .cache
            .entry(n)
            .or_insert_with(|| cos_minimal_polynomial(phi).ok())
            .clone();
        CosClass::IrrationalCos(Irrationality {
            degree: cos_degree(phi),
            degree_is_bound: false,
            min_poly,
        })
    }
}

/// Helper for tests and callers that want integer coefficient lists.
pub fn descending_i64(p: &IntPolynomial) -> Option<Vec<i64>> {
    use num_traits::ToPrimitive;
    p.descending().iter().map(BigInt::to_i64).collect()
}
