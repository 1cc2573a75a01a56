use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::primes::{is_prime, Valuation};
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::OutOfRange(format!("{p} is not prime")));
    }
    Ok(())
}

/// Largest `k` with `p^k | x`; zero has infinite valuation.
pub fn padic_valuation(x: &BigInt, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let mut k = 0;
    let mut m = x.clone();
    while (&m % p).is_zero() {
        m /= p;
        k += 1;
    }
    Ok(Valuation::Finite(k))
}

/// `|q|_p = p^{−v_p(q)}`, with `|0|_p = 0`.
pub fn padic_norm(q: &Rational, p: u64) -> Result<Rational> {
    check_prime(p)?;
    if q.is_zero() {
        return Ok(Rational::zero());
    }
    let (Valuation::Finite(vn), Valuation::Finite(vd)) =
        (padic_valuation(q.numer(), p)?, padic_valuation(q.denom(), p)?)
    else {
        unreachable!("nonzero numerator and denominator");
    };
    let v = vn as i64 - vd as i64;
    let pp = BigInt::from(p).pow(v.unsigned_abs() as u32);
    Ok(if v >= 0 {
        Rational::new(BigInt::one(), pp)?
    } else {
        Rational::integer(pp)
    })
}
