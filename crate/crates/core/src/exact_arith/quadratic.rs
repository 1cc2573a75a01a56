use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// `q0 + q1·√d` with `d` square-free; `d = 1` whenever `q1 = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticValue {
    pub q0: Rational,
    pub q1: Rational,
    #[serde(with = "bigint_string")]
    pub d: BigInt,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}

impl QuadraticValue {
    pub fn rational(q: Rational) -> Self {
        QuadraticValue {
            q0: q,
            q1: Rational::zero(),
            d: BigInt::one(),
        }
    }

    /// Canonicalizes `q0 + q1·√radicand` for any positive integer radicand.
    pub fn new(q0: Rational, q1: Rational, radicand: &BigInt) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand(radicand.to_string()));
        }
        let (k, d) = square_free_decompose(radicand)?;
        let q1 = q1 * Rational::integer(k);
        if q1.is_zero() || d.is_zero() {
            return Ok(Self::rational(q0));
        }
        if d.is_one() {
            return Ok(Self::rational(q0 + q1));
        }
        Ok(QuadraticValue { q0, q1, d })
    }

    pub fn is_rational(&self) -> bool {
        self.q1.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.q0)
    }

    pub fn to_f64(&self) -> f64 {
        self.q0.to_f64() + self.q1.to_f64() * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        QuadraticValue {
            q0: &self.q0 + r,
            ..self.clone()
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::rational(Rational::zero());
        }
        QuadraticValue {
            q0: &self.q0 * r,
            q1: &self.q1 * r,
            d: self.d.clone(),
        }
    }

    /// Sum when both live in the same quadratic field (or either is rational).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if other.is_rational() {
            return Some(self.add_rational(&other.q0));
        }
        if self.is_rational() {
            return Some(other.add_rational(&self.q0));
        }
        if self.d != other.d {
            return None;
        }
        let q1 = &self.q1 + &other.q1;
        let q0 = &self.q0 + &other.q0;
        Some(if q1.is_zero() {
            Self::rational(q0)
        } else {
            QuadraticValue {
                q0,
                q1,
                d: self.d.clone(),
            }
        })
    }

    /// Product when both live in the same quadratic field (or either is rational).
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if other.is_rational() {
            return Some(self.scale(&other.q0));
        }
        if self.is_rational() {
            return Some(other.scale(&self.q0));
        }
        if self.d != other.d {
            return None;
        }
        let d = Rational::integer(self.d.clone());
        let q0 = &self.q0 * &other.q0 + &self.q1 * &other.q1 * d;
        let q1 = &self.q0 * &other.q1 + &self.q1 * &other.q0;
        Some(if q1.is_zero() {
            Self::rational(q0)
        } else {
            QuadraticValue {
                q0,
                q1,
                d: self.d.clone(),
            }
        })
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.q0)
        } else if self.q0.is_zero() {
            write!(f, "({})·√{}", self.q1, self.d)
        } else {
            write!(f, "{} + ({})·√{}", self.q0, self.q1, self.d)
        }
    }
}

impl fmt::Debug for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact square root of a nonnegative rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtValue {
    Rational(Rational),
    /// `q1·√d` with `q1 > 0`, `d > 1` square-free.
    Quadratic(QuadraticValue),
}

impl SqrtValue {
    pub fn as_quadratic(&self) -> QuadraticValue {
        match self {
            SqrtValue::Rational(r) => QuadraticValue::rational(r.clone()),
            SqrtValue::Quadratic(q) => q.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.as_quadratic().to_f64()
    }
}

pub fn sqrt_classify(r: &Rational) -> Result<SqrtValue> {
    if r.is_negative() {
        return Err(Error::NegativeRadicand(r.to_string()));
    }
    if let Some(s) = r.sqrt_exact() {
        return Ok(SqrtValue::Rational(s));
    }
    // √(a/b) = √(ab)/b
    let (k, d) = square_free_decompose_product(&[r.numer().clone(), r.denom().clone()])?;
    let q1 = Rational::new(k, r.denom().clone())?;
    Ok(SqrtValue::Quadratic(QuadraticValue {
        q0: Rational::zero(),
        q1,
        d,
    }))
}

/// Trial-division limit; radicands whose cofactor cannot be certified
/// square-free within it are rejected rather than guessed.
const TRIAL_LIMIT: u64 = 1 << 22;

/// Writes `n = k²·d` with `d` square-free (`n >= 0`; `0 = 0²·0`).
pub fn square_free_decompose(n: &BigInt) -> Result<(BigInt, BigInt)> {
    if n.is_negative() {
        return Err(Error::NegativeRadicand(n.to_string()));
    }
    if n.is_zero() {
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    let mut m = n.clone();
    let mut k = BigInt::one();
    let mut d = BigInt::one();
    let mut p = 2u64;
    // Once p³ > m, the cofactor has at most two prime factors.
    while p <= TRIAL_LIMIT && BigInt::from(p).pow(3) <= m {
        if (&m % p).is_zero() {
            let mut e = 0u32;
            while (&m % p).is_zero() {
                m /= p;
                e += 1;
            }
            k *= BigInt::from(p).pow(e / 2);
            if e % 2 == 1 {
                d *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let s = m.sqrt();
    if &s * &s == m {
        return Ok((k * s, d));
    }
    if BigInt::from(p).pow(3) <= m {
        return Err(Error::OutOfRange(format!(
            "cannot certify square-free part of {n} by trial division"
        )));
    }
    Ok((k, d * m))
}

/// Combines two decompositions: `(k1²d1)(k2²d2) = (k1k2g)²·(d1/g)(d2/g)`.
pub fn square_free_combine(a: (BigInt, BigInt), b: (BigInt, BigInt)) -> (BigInt, BigInt) {
    use num_integer::Integer;
    let ((k1, d1), (k2, d2)) = (a, b);
    if d1.is_zero() || d2.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let g = d1.gcd(&d2);
    (k1 * k2 * &g, (d1 / &g) * (d2 / &g))
}

/// Square-free decomposition of a product, factoring each term separately.
pub fn square_free_decompose_product(factors: &[BigInt]) -> Result<(BigInt, BigInt)> {
    let mut acc = (BigInt::one(), BigInt::one());
    for f in factors {
        acc = square_free_combine(acc, square_free_decompose(f)?);
    }
    Ok(acc)
}
