use serde::{Deserialize, Serialize};

use super::primes::PythagoreanPrime;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Default number of fractal levels.
pub const DEFAULT_DEPTH: usize = 8;

/// A point of the depth-`J` Cantor set: one digit per level.
///
/// Digit 0 is the central element; digits `1..=N` are the polygon vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CantorPoint {
    digits: Vec<u64>,
}

impl CantorPoint {
    pub fn new(digits: Vec<u64>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::OutOfRange("Cantor point needs depth >= 1".into()));
        }
        Ok(CantorPoint { digits })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn depth(&self) -> usize {
        self.digits.len()
    }

    /// Length of the common digit prefix.
    pub fn common_prefix(&self, other: &CantorPoint) -> usize {
        self.digits
            .iter()
            .zip(&other.digits)
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub(crate) fn check_base(&self, p: u64) -> Result<()> {
        match self.digits.iter().find(|&&d| d >= p) {
            Some(d) => Err(Error::Incompatible(format!("digit {d} out of range for p = {p}"))),
            None => Ok(()),
        }
    }
}

/// Exact planar model of the Cantor set: `x ↦ Σ_j s^{j−1}·v(d_j)`.
///
/// Vertices sit on the unit circle at rational points `((1−t²)/(1+t²), 2t/(1+t²))`
/// for an evenly spaced grid of `t` in `(−1, 1)`, together with their point
/// reflections, so the `N` vertices cover the whole circle in angular order.
#[derive(Clone, Debug)]
pub struct CantorGeometry {
    prime: PythagoreanPrime,
    contraction: Rational,
    vertices: Vec<(Rational, Rational)>,
}

impl CantorGeometry {
    /// `contraction` must lie in `(0, 1/(2N)]` so the level pieces stay disjoint.
    pub fn new(prime: PythagoreanPrime, contraction: Rational) -> Result<Self> {
        let n = prime.n();
        let max = Rational::frac(1, 2 * n as i64);
        if !contraction.is_positive() || contraction > max {
            return Err(Error::OutOfRange(format!(
                "contraction {contraction} outside (0, {max}]"
            )));
        }
        Ok(CantorGeometry {
            prime,
            contraction,
            vertices: polygon_vertices(n),
        })
    }

    /// Geometry with the largest admissible contraction `1/(2N)`.
    pub fn with_default_contraction(prime: PythagoreanPrime) -> Self {
        let s = Rational::frac(1, 2 * prime.n() as i64);
        Self::new(prime, s).expect("default contraction is admissible")
    }

    pub fn prime(&self) -> &PythagoreanPrime {
        &self.prime
    }

    pub fn contraction(&self) -> &Rational {
        &self.contraction
    }

    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    /// Image of a single digit: the origin for 0, else the digit-th vertex.
    pub fn digit_point(&self, d: u64) -> (Rational, Rational) {
        if d == 0 {
            (Rational::zero(), Rational::zero())
        } else {
            self.vertices[(d - 1) as usize].clone()
        }
    }

    pub fn embed(&self, x: &CantorPoint) -> Result<(Rational, Rational)> {
        x.check_base(self.prime.p())?;
        let s = &self.contraction;
        let mut it = x.digits().iter().rev();
        let last = it.next().expect("depth >= 1");
        let (mut ax, mut ay) = self.digit_point(*last);
        for &d in it {
            let (vx, vy) = self.digit_point(d);
            ax = vx + s * &ax;
            ay = vy + s * &ay;
        }
        Ok((ax, ay))
    }

    /// Upper bound `2/(1 − s)` on the diameter of the embedded set.
    pub fn diameter_bound(&self) -> Rational {
        Rational::integer(2) / (Rational::one() - &self.contraction)
    }

    /// Smallest squared distance between two distinct digit images.
    pub fn min_separation_sq(&self) -> Rational {
        let mut pts = vec![(Rational::zero(), Rational::zero())];
        pts.extend(self.vertices.iter().cloned());
        let mut best: Option<Rational> = None;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let d = (&pts[i].0 - &pts[j].0).square() + (&pts[i].1 - &pts[j].1).square();
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
        best.expect("at least two points")
    }
}

fn polygon_vertices(n: u64) -> Vec<(Rational, Rational)> {
    let half = (n / 2) as i64;
    let on_circle = |t: Rational| {
        let t2 = t.square();
        let den = Rational::one() + &t2;
        ((Rational::one() - &t2) / &den, Rational::integer(2) * &t / &den)
    };
    let right: Vec<_> = (1..=half)
        .map(|i| on_circle(Rational::frac(2 * i - 1 - half, half)))
        .collect();
    let left: Vec<_> = right.iter().map(|(x, y)| (-x, -y)).collect();
    right.into_iter().chain(left).collect()
}

/// Embeds `x` with the given prime and contraction.
pub fn cantor_embed(
    x: &CantorPoint,
    prime: PythagoreanPrime,
    contraction: Rational,
) -> Result<(Rational, Rational)> {
    CantorGeometry::new(prime, contraction)?.embed(x)
}
