//! Exact rationality of the third side of a spherical triangle,
//! `cos c = cos a·cos b + sin a·sin b·cos γ`, for rational `cos a`, `cos b`
//! and `γ` a rational multiple of π.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::niven::{niven_classify, quadratic_cos, CosClass, Irrationality};
use super::quadratic::square_free_decompose_product;
use super::{IntPolynomial, PiAngle, Rational};
use crate::error::{Error, Result};

fn check_cos(c: &Rational, name: &str) -> Result<()> {
    if c.abs() > Rational::one() {
        return Err(Error::OutOfRange(format!("{name} = {c} is outside [-1, 1]")));
    }
    Ok(())
}

/// `√r` for `r = (1 − a²)(1 − b²)` as `q·√s`, `s` square-free (`s = 1` when rational).
fn sine_product(cos_a: &Rational, cos_b: &Rational) -> Result<(Rational, BigInt)> {
    // 1 − (n/d)² = (d − n)(d + n)/d²
    let mut factors = Vec::with_capacity(4);
    for c in [cos_a, cos_b] {
        factors.push(c.denom() - c.numer());
        factors.push(c.denom() + c.numer());
    }
    let (k, s) = square_free_decompose_product(&factors)?;
    if s.is_zero() {
        return Ok((Rational::zero(), BigInt::one()));
    }
    let q = Rational::new(k, cos_a.denom() * cos_b.denom())?;
    Ok((q, s))
}

fn irrational(degree: u64, poly: Result<IntPolynomial>) -> CosClass {
    CosClass::IrrationalCos(Irrationality {
        degree,
        degree_is_bound: false,
        min_poly: poly.ok(),
    })
}

/// `(x − a)² − b²·m`, the minimal polynomial of `a ± b√m` for nonsquare `m`.
fn quadratic_poly(a: &Rational, b: &Rational, m: &BigInt) -> Result<IntPolynomial> {
    let m = Rational::integer(m.clone());
    IntPolynomial::from_rational_ascending(&[
        a.square() - b.square() * m,
        Rational::integer(-2) * a,
        Rational::one(),
    ])
}

/// Classifies `cos_a·cos_b + sin a·sin b·cos γ` with both sines taken nonnegative.
pub fn classify_third_side(cos_a: &Rational, cos_b: &Rational, gamma: &PiAngle) -> Result<CosClass> {
    check_cos(cos_a, "cos A")?;
    check_cos(cos_b, "cos B")?;
    let base = cos_a * cos_b;
    let (q, s) = sine_product(cos_a, cos_b)?;

    // Degenerate triangle: one side is 0 or π.
    if q.is_zero() {
        return Ok(CosClass::RationalCos(base));
    }

    let cos_g = niven_classify(gamma);

    // (i) √r = q rational.
    if s.is_one() {
        return Ok(match cos_g {
            CosClass::RationalCos(c) => CosClass::RationalCos(base + &q * c),
            CosClass::IrrationalCos(w) => {
                let poly = match &w.min_poly {
                    Some(p) => p.affine_image(&q, &base),
                    None => Err(Error::DegreeCap {
                        order: gamma.root_of_unity_order(),
                        cap: super::niven::MINPOLY_ORDER_CAP,
                    }),
                };
                irrational(w.degree, poly)
            }
        });
    }

    // From here √r = q·√s is irrational.
    match cos_g {
        // (ii) and (iii)
        CosClass::RationalCos(c) => {
            if c.is_zero() {
                Ok(CosClass::RationalCos(base))
            } else {
                Ok(irrational(2, quadratic_poly(&base, &(&q * c), &s)))
            }
        }
        CosClass::IrrationalCos(w) if w.degree == 2 => {
            // (iv) cos γ = u + v√D
            let qc = quadratic_cos(gamma)?.expect("degree-2 cosine");
            let (u, v, big_d) = (qc.q0, qc.q1, qc.d);
            let (qu, qv) = (&q * &u, &q * &v);
            if s == big_d {
                // √r·√D = q·s is rational
                let shifted = &base + &qv * Rational::integer(s.clone());
                if u.is_zero() {
                    Ok(CosClass::RationalCos(shifted))
                } else {
                    Ok(irrational(2, quadratic_poly(&shifted, &qu, &s)))
                }
            } else if u.is_zero() {
                // R + q·v·√(sD)
                Ok(irrational(2, quadratic_poly(&base, &qv, &(&s * &big_d))))
            } else {
                // R + α + β with α = q·u·√s, β = q·v·√(sD) independent over Q
                let a2 = qu.square() * Rational::integer(s.clone());
                let b2 = qv.square() * Rational::integer(&s * &big_d);
                let y_poly = IntPolynomial::from_rational_ascending(&[
                    (&a2 - &b2).square(),
                    Rational::zero(),
                    Rational::integer(-2) * (&a2 + &b2),
                    Rational::zero(),
                    Rational::one(),
                ]);
                let poly = y_poly.and_then(|p| p.affine_image(&Rational::one(), &base));
                Ok(irrational(4, poly))
            }
        }
        // (v) a rational value would force cos γ ∈ Q(√r), degree ≤ 2.
        CosClass::IrrationalCos(w) => Ok(CosClass::IrrationalCos(Irrationality {
            degree: 2 * w.degree,
            degree_is_bound: true,
            min_poly: None,
        })),
    }
}
