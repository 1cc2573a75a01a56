//! Primitive integer polynomials and the cyclotomic constructions behind
//! minimal polynomials of `2cos(2π/n)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A nonzero integer polynomial with content 1 and positive leading coefficient.
///
/// Coefficients are stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Normalizes `coeffs` (ascending) to primitive form with a positive leading term.
    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::OutOfRange("zero polynomial".into()));
        }
        let content = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if coeffs.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let scale = content * sign;
        for c in &mut coeffs {
            *c = &*c / &scale;
        }
        Ok(IntPolynomial { coeffs })
    }

    /// Descending-order integer coefficients, e.g. `[2, 0, -1]` for `2x² − 1`.
    pub fn from_descending<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Result<Self> {
        let mut v: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        v.reverse();
        Self::from_ascending(v)
    }

    /// Clears denominators of rational coefficients (ascending).
    pub fn from_rational_ascending(coeffs: &[Rational]) -> Result<Self> {
        let l = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        Self::from_ascending(ints)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ascending(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// The primitive polynomial vanishing at `scale·y + shift` whenever `self`
    /// vanishes at `y`, i.e. `self((x − shift)/scale)` with denominators cleared.
    pub fn affine_image(&self, scale: &Rational, shift: &Rational) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::OutOfRange("affine image with zero scale".into()));
        }
        // (x - shift)/scale = inv·x + off
        let inv = scale.recip()?;
        let off = -(shift * &inv);
        let lin = [off, inv];
        let mut acc: Vec<Rational> = vec![Rational::zero()];
        for c in self.coeffs.iter().rev() {
            acc = rat_mul(&acc, &lin);
            acc[0] = &acc[0] + Rational::integer(c.clone());
        }
        Self::from_rational_ascending(&acc)
    }

    /// Rational roots by the rational-root theorem; `None` when the end
    /// coefficients are too large to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let mut roots = Vec::new();
        let mut coeffs = self.coeffs.clone();
        while coeffs.first().is_some_and(|c| c.is_zero()) {
            coeffs.remove(0);
            if !roots.contains(&Rational::zero()) {
                roots.push(Rational::zero());
            }
        }
        if coeffs.len() <= 1 {
            return Some(roots);
        }
        let c0 = coeffs[0].abs().to_u64().filter(|&v| v <= 1_000_000_000_000)?;
        let cn = coeffs.last().unwrap().abs().to_u64().filter(|&v| v <= 1_000_000_000_000)?;
        let reduced = IntPolynomial { coeffs };
        for p in divisors(c0) {
            for q in divisors(cn) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(p) * sign, q).ok()?;
                    if reduced.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn rat_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// One serialized coefficient: a JSON integer when it fits in `i64`, else a string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Coefficient> = self
            .descending()
            .iter()
            .map(|c| c.to_i64().map_or_else(|| Coefficient::Big(c.to_string()), Coefficient::Small))
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Coefficient>::deserialize(d)?;
        let ints = v
            .into_iter()
            .map(|c| match c {
                Coefficient::Small(i) => Ok(BigInt::from(i)),
                Coefficient::Big(s) => s.parse::<BigInt>(),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        IntPolynomial::from_descending(ints).map_err(serde::de::Error::custom)
    }
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius_divisor_split(n: u64) -> (Vec<u64>, Vec<u64>) {
    // Squarefree divisors d of n split by the sign of μ(n/d).
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    for mask in 0u32..(1 << primes.len()) {
        let rad: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| *p)
            .product();
        // μ(rad) sign; the divisor used is n / rad.
        if mask.count_ones() % 2 == 0 {
            plus.push(n / rad);
        } else {
            minus.push(n / rad);
        }
    }
    (plus, minus)
}

/// Coefficients (ascending) of the cyclotomic polynomial `Φ_n`.
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let (plus, minus) = mobius_divisor_split(n);
    let mut p: Vec<i128> = vec![1];
    for d in plus {
        // p·(z^d − 1)
        let d = d as usize;
        let mut out = vec![0i128; p.len() + d];
        for (i, c) in p.iter().enumerate() {
            out[i + d] += c;
            out[i] -= c;
        }
        p = out;
    }
    for d in minus {
        // exact division by (z^d − 1): p_j = q_{j−d} − q_j
        let d = d as usize;
        let deg_q = p.len() - 1 - d;
        let mut q = vec![0i128; deg_q + 1];
        for j in (d..p.len()).rev() {
            let qj = if j <= deg_q { q[j] } else { 0 };
            q[j - d] = p[j] + qj;
        }
        p = q;
    }
    // Signs: the product over all divisors carries (−1)^{#plus − #minus}; normalize.
    if p.last().is_some_and(|c| *c < 0) {
        for c in &mut p {
            *c = -*c;
        }
    }
    p.into_iter().map(BigInt::from).collect()
}

/// Minimal polynomial of `2cos(2π/n)` over the rationals (ascending, monic).
///
/// Built from the palindromic `Φ_n` by rewriting `z^{-m}Φ_n(z)` in the
/// variable `x = z + 1/z` with the recurrence `D_{k+1} = x·D_k − D_{k−1}`
/// (`D_k(2cos t) = 2cos(kt)`).
pub fn two_cos_minimal_polynomial(n: u64) -> Vec<BigInt> {
    match n {
        1 => return vec![BigInt::from(-2), BigInt::one()],
        2 => return vec![BigInt::from(2), BigInt::one()],
        _ => {}
    }
    let phi = cyclotomic(n);
    let m = (phi.len() - 1) / 2;
    let mut out = vec![BigInt::zero(); m + 1];
    out[0] = phi[m].clone();
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)]; // D_0
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()]; // D_1
    for k in 1..=m {
        let c = &phi[m + k];
        if !c.is_zero() {
            for (i, dk) in cur.iter().enumerate() {
                out[i] += c * dk;
            }
        }
        if k < m {
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (i, dk) in cur.iter().enumerate() {
                next[i + 1] += dk;
            }
            for (i, dk) in prev.iter().enumerate() {
                next[i] -= dk;
            }
            prev = std::mem::replace(&mut cur, next);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn normalizes_content_and_sign() {
        let p = IntPolynomial::from_descending([-4, 0, 2]).unwrap();
        assert_eq!(p.descending(), ints(&[2, 0, -1]));
        assert_eq!(p.to_string(), "2x^2 - 1");
        assert!(IntPolynomial::from_descending([0, 0]).is_err());
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), ints(&[1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of magnitude 2.
        let c = cyclotomic(105);
        assert_eq!(c.len() - 1, 48);
        assert!(c.contains(&BigInt::from(-2)));
    }

    #[test]
    fn two_cos_polys() {
        assert_eq!(two_cos_minimal_polynomial(3), ints(&[1, 1]));
        assert_eq!(two_cos_minimal_polynomial(4), ints(&[0, 1]));
        assert_eq!(two_cos_minimal_polynomial(5), ints(&[-1, 1, 1]));
        assert_eq!(two_cos_minimal_polynomial(6), ints(&[-1, 1]));
        assert_eq!(two_cos_minimal_polynomial(7), ints(&[-1, -2, 1, 1]));
        assert_eq!(two_cos_minimal_polynomial(8), ints(&[-2, 0, 1]));
    }

    #[test]
    fn totient() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), *e);
        }
    }

    #[test]
    fn affine_image_moves_roots() {
        // root 1 of x − 1 mapped by 3y + 2 → root 5
        let p = IntPolynomial::from_descending([1, -1]).unwrap();
        let q = p.affine_image(&Rational::integer(3), &Rational::integer(2)).unwrap();
        assert_eq!(q.descending(), ints(&[1, -5]));
    }

    #[test]
    fn rational_root_search() {
        let p = IntPolynomial::from_descending([2, -1]).unwrap();
        assert_eq!(p.rational_roots(), Some(vec![Rational::frac(1, 2)]));
        let q = IntPolynomial::from_descending([2, 0, -1]).unwrap();
        assert_eq!(q.rational_roots(), Some(vec![]));
    }
}
