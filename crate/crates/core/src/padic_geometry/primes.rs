use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime `p ≡ 1 (mod 4)` with its decomposition `p = s² + t²`, `s < t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PythagoreanPrime {
    p: u64,
    s: u64,
    t: u64,
}

impl PythagoreanPrime {
    pub fn new(p: u64) -> Result<Self> {
        is_pythagorean_prime(p)
            .ok_or_else(|| Error::OutOfRange(format!("{p} is not a Pythagorean prime")))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `N = p − 1`, the number of helix trajectories.
    pub fn n(&self) -> u64 {
        self.p - 1
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Decomposes a prime `p ≡ 1 (mod 4)` as `s² + t²` (Cornacchia / Hermite–Serret).
pub fn is_pythagorean_prime(p: u64) -> Option<PythagoreanPrime> {
    if p % 4 != 1 || !is_prime(p) {
        return None;
    }
    // x with x² ≡ −1 (mod p) from any quadratic non-residue c: x = c^((p−1)/4)
    let x = (2..p)
        .map(|c| pow_mod(c, (p - 1) / 4, p))
        .find(|&x| mul_mod(x, x, p) == p - 1)?;
    // The first Euclidean remainder below √p is one of the two squares.
    let (mut a, mut b) = (p as u128, x as u128);
    while b * b > p as u128 {
        (a, b) = (b, a % b);
    }
    let s = b as u64;
    let rest = p as u128 - b * b;
    let t = (rest as f64).sqrt().round() as u128;
    let t = (t.saturating_sub(1)..=t + 1).find(|&t| t * t == rest)? as u64;
    let (s, t) = if s < t { (s, t) } else { (t, s) };
    Some(PythagoreanPrime { p, s, t })
}

/// Nonzero-integer valuation, or the infinite valuation of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}
