//! Helix descriptors `(n₁, n₂, N)` and the qubit states they encode.
//!
//! A descriptor stands for `cos²(θ/2) = n₁/N` and `φ = 2π·n₂/N`. Only states
//! whose squared amplitudes and phase fractions have denominators dividing `N`
//! have a descriptor; every other state is non-ontic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::padic_geometry::PythagoreanPrime;

/// Checks that `N` is a positive multiple of 4 with `N + 1` a Pythagorean prime.
pub fn validate_modulus(n: u64) -> Result<PythagoreanPrime> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::InvalidModulus(n));
    }
    n.checked_add(1)
        .and_then(|p| PythagoreanPrime::new(p).ok())
        .ok_or(Error::InvalidModulus(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor", into = "RawDescriptor")]
pub struct Descriptor {
    n1: u64,
    n2: u64,
    n: u64,
}

#[derive(Serialize, Deserialize)]
struct RawDescriptor {
    n1: u64,
    n2: u64,
    #[serde(rename = "N")]
    n: u64,
}

impl TryFrom<RawDescriptor> for Descriptor {
    type Error = Error;

    fn try_from(r: RawDescriptor) -> Result<Self> {
        Descriptor::new(r.n1, r.n2, r.n)
    }
}

impl From<Descriptor> for RawDescriptor {
    fn from(d: Descriptor) -> Self {
        RawDescriptor {
            n1: d.n1,
            n2: d.n2,
            n: d.n,
        }
    }
}

impl Descriptor {
    /// Requires `1 ≤ n1, n2 ≤ N` and a valid modulus `N`.
    pub fn new(n1: u64, n2: u64, n: u64) -> Result<Self> {
        validate_modulus(n)?;
        for (name, v) in [("n1", n1), ("n2", n2)] {
            if v == 0 || v > n {
                return Err(Error::OutOfRange(format!("{name} = {v} outside 1..={n}")));
            }
        }
        Ok(Descriptor { n1, n2, n })
    }

    pub fn n1(&self) -> u64 {
        self.n1
    }

    pub fn n2(&self) -> u64 {
        self.n2
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// `1 − 2n₁/N`.
    pub fn correlation(&self) -> Rational {
        correlation_from_descriptor(self.n1, self.n).expect("validated descriptor")
    }
}

/// `cos θ/2 |a⟩ + e^{iφ} sin θ/2 |ā⟩` by its rational data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QubitState {
    cos_sq_half_theta: Rational,
    /// `φ/2π`, reduced to `[0, 1)`.
    phase_frac: Rational,
}

impl QubitState {
    pub fn new(cos_sq_half_theta: Rational, phase_frac: Rational) -> Result<Self> {
        if cos_sq_half_theta.is_negative() || cos_sq_half_theta > Rational::one() {
            return Err(Error::OutOfRange(format!(
                "cos²(θ/2) = {cos_sq_half_theta} outside [0, 1]"
            )));
        }
        let phase_frac = &phase_frac - Rational::integer(phase_frac.floor());
        Ok(QubitState {
            cos_sq_half_theta,
            phase_frac,
        })
    }

    pub fn cos_sq_half_theta(&self) -> &Rational {
        &self.cos_sq_half_theta
    }

    pub fn phase_frac(&self) -> &Rational {
        &self.phase_frac
    }
}

/// Result of inverting the correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Correspondence {
    Ontic(Descriptor),
    NonOntic,
}

pub fn descriptor_to_state(d: &Descriptor) -> QubitState {
    let n = d.n as i64;
    QubitState::new(Rational::frac(d.n1 as i64, n), Rational::frac(d.n2 as i64, n))
        .expect("descriptor ranges map into the state ranges")
}

/// `k·N` as an integer in `lo..=N`, if it is one.
fn scaled_count(k: &Rational, n: u64, lo: u64) -> Option<u64> {
    use num_traits::ToPrimitive;
    let scaled = k * Rational::integer(n as i64);
    if !scaled.is_integer() {
        return None;
    }
    scaled.numer().to_u64().filter(|&v| v >= lo && v <= n)
}

pub fn state_to_descriptor(q: &QubitState, n: u64) -> Result<Correspondence> {
    validate_modulus(n)?;
    let Some(n1) = scaled_count(&q.cos_sq_half_theta, n, 1) else {
        return Ok(Correspondence::NonOntic);
    };
    let Some(n2) = scaled_count(&q.phase_frac, n, 0) else {
        return Ok(Correspondence::NonOntic);
    };
    // phase 0 is the full turn n₂ = N
    let n2 = if n2 == 0 { n } else { n2 };
    Descriptor::new(n1, n2, n).map(Correspondence::Ontic)
}

/// Whether every squared amplitude and phase fraction has denominator dividing `N`.
pub fn ontic_check(amplitudes_sq: &[Rational], phase_fracs: &[Rational], n: u64) -> Result<bool> {
    validate_modulus(n)?;
    let total: Rational = amplitudes_sq.iter().cloned().sum();
    if total != Rational::one() {
        return Err(Error::NotNormalized(total.to_string()));
    }
    if amplitudes_sq.iter().any(Rational::is_negative) {
        return Err(Error::OutOfRange("negative squared amplitude".into()));
    }
    let n = num_bigint::BigInt::from(n);
    Ok(amplitudes_sq
        .iter()
        .chain(phase_fracs)
        .all(|r| (&n % r.denom()) == num_bigint::BigInt::ZERO))
}

/// `a`/`ā` labels of the `N` helix trajectories; the central one is unlabelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelString {
    labels: Vec<bool>,
}

impl LabelString {
    /// `true` for `a`.
    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    pub fn count_a(&self) -> usize {
        self.labels.iter().filter(|&&a| a).count()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl fmt::Display for LabelString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.labels {
            f.write_str(if a { "a" } else { "A" })?;
        }
        Ok(())
    }
}

impl Serialize for LabelString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A contiguous block of `n₁` labels `a`, starting at index `n₂ mod N`.
pub fn label_helix(d: &Descriptor) -> LabelString {
    let labels = (0..d.n)
        .map(|i| (i + d.n - d.n2 % d.n) % d.n < d.n1)
        .collect();
    LabelString { labels }
}

/// Singlet correlation `1 − 2n₁/N`; accepts `n₁ = 0` (antiparallel settings).
pub fn correlation_from_descriptor(n1: u64, n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::ZeroDenominator);
    }
    if n1 > n {
        return Err(Error::OutOfRange(format!("n1 = {n1} exceeds N = {n}")));
    }
    Ok(Rational::one() - Rational::frac(2 * n1 as i64, n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(c: (i64, i64), ph: (i64, i64)) -> QubitState {
        QubitState::new(Rational::frac(c.0, c.1), Rational::frac(ph.0, ph.1)).unwrap()
    }

    #[test]
    fn modulus_validation() {
        assert!(validate_modulus(4).is_ok());
        assert!(validate_modulus(520).is_ok());
        assert!(validate_modulus(8).is_err());
        assert!(validate_modulus(6).is_err());
        assert!(validate_modulus(0).is_err());
        assert!(Descriptor::new(3, 2, 8).is_err());
        assert!(Descriptor::new(0, 2, 4).is_err());
        assert!(Descriptor::new(5, 2, 4).is_err());
    }

    #[test]
    fn forward_map() {
        let s = descriptor_to_state(&Descriptor::new(2, 4, 4).unwrap());
        assert_eq!(s, state((1, 2), (0, 1)));
        let s = descriptor_to_state(&Descriptor::new(4, 1, 4).unwrap());
        assert_eq!(s, state((1, 1), (1, 4)));
    }

    #[test]
    fn inverse_map() {
        let back = |c, ph| state_to_descriptor(&state(c, ph), 4).unwrap();
        assert_eq!(back((1, 2), (0, 1)), Correspondence::Ontic(Descriptor::new(2, 4, 4).unwrap()));
        assert_eq!(back((1, 1), (1, 4)), Correspondence::Ontic(Descriptor::new(4, 1, 4).unwrap()));
        assert_eq!(back((1, 3), (0, 1)), Correspondence::NonOntic);
        assert_eq!(back((0, 1), (0, 1)), Correspondence::NonOntic);
        assert_eq!(back((1, 2), (1, 3)), Correspondence::NonOntic);
    }

    #[test]
    fn ontic_examples() {
        let r = |a, b| Rational::frac(a, b);
        assert!(ontic_check(&[r(1, 2), r(1, 2)], &[r(0, 1), r(1, 4)], 4).unwrap());
        assert!(!ontic_check(&[r(1, 3), r(2, 3)], &[r(0, 1), r(0, 1)], 4).unwrap());
        let quarter = vec![r(1, 4); 4];
        assert!(ontic_check(&quarter, &[r(0, 1), r(1, 4), r(1, 2), r(3, 4)], 4).unwrap());
        assert!(ontic_check(&[r(1, 2)], &[], 4).is_err());
    }

    #[test]
    fn labels() {
        let l = |n1, n2| label_helix(&Descriptor::new(n1, n2, 4).unwrap()).to_string();
        assert_eq!(l(4, 4), "aaaa");
        assert_eq!(l(2, 4), "aaAA");
        assert_eq!(l(2, 1), "AaaA");
        assert_eq!(l(1, 3), "AAAa");
        assert_eq!(l(3, 3), "aaAa");
    }

    #[test]
    fn correlations() {
        assert_eq!(correlation_from_descriptor(520, 520).unwrap(), Rational::integer(-1));
        assert_eq!(correlation_from_descriptor(260, 520).unwrap(), Rational::zero());
        assert_eq!(correlation_from_descriptor(390, 520).unwrap(), Rational::frac(-1, 2));
        assert_eq!(correlation_from_descriptor(0, 4).unwrap(), Rational::one());
        assert!(correlation_from_descriptor(5, 4).is_err());
    }

    #[test]
    fn json_shape() {
        let d = Descriptor::new(2, 1, 4).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"n1":2,"n2":1,"N":4}"#);
        assert_eq!(serde_json::from_str::<Descriptor>(&text).unwrap(), d);
        assert!(serde_json::from_str::<Descriptor>(r#"{"n1":2,"n2":1,"N":8}"#).is_err());
    }
}
