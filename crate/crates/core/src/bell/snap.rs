use num_traits::ToPrimitive;
use serde::Serialize;

use super::chsh::CorrelationQuadruple;
use super::frame::MeasurementFrame;
use crate::error::Result;
use crate::exact_arith::{rational_cos, PiAngle, Rational};
use crate::hilbert::{correlation_from_descriptor, validate_modulus, Descriptor};

/// A relative angle landed on the descriptor grid `n₁/N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Snap {
    pub theta: PiAngle,
    pub n1: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub correlation: Rational,
}

impl Snap {
    pub fn new(theta: PiAngle, n: u64) -> Self {
        let n1 = snap_count(&theta, n);
        Snap {
            theta,
            n1,
            n,
            correlation: correlation_from_descriptor(n1, n).expect("n1 ≤ N"),
        }
    }

    /// Descriptor with phase `n₂ = N`; fails for `n₁ = 0`, which has none.
    pub fn descriptor(&self) -> Result<Descriptor> {
        Descriptor::new(self.n1, self.n, self.n)
    }

    /// `N · correlation = N − 2n₁`.
    pub fn scaled(&self) -> i64 {
        self.n as i64 - 2 * self.n1 as i64
    }
}

/// Nearest `n₁` to `N·cos²(θ/2)`, ties toward even.
///
/// Exact whenever `cos θ` is rational; otherwise the value is irrational and
/// cannot sit on a tie.
pub fn snap_count(theta: &PiAngle, n: u64) -> u64 {
    let target = match rational_cos(theta) {
        Some(c) => {
            let exact = Rational::integer(n as i64) * (Rational::one() + &c) / Rational::integer(2);
            return round_half_even(&exact);
        }
        None => n as f64 * (1.0 + theta.radians().cos()) / 2.0,
    };
    (target.round_ties_even().max(0.0) as u64).min(n)
}

fn round_half_even(r: &Rational) -> u64 {
    let floor = r.floor();
    let frac = r - Rational::integer(floor.clone());
    let half = Rational::frac(1, 2);
    let lower = floor.to_u64().expect("nonnegative count");
    if frac < half || (frac == half && lower.is_multiple_of(2)) {
        lower
    } else {
        lower + 1
    }
}

/// A frame pushed through the grid: per-pair snaps and their correlations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SnappedFrame {
    pub snaps: [Snap; 4],
    pub quadruple: CorrelationQuadruple,
}

impl SnappedFrame {
    /// Descriptors of the four pairs, where they exist.
    pub fn descriptors(&self) -> [Result<Descriptor>; 4] {
        std::array::from_fn(|k| self.snaps[k].descriptor())
    }
}

pub fn quadruple_from_frame(frame: &MeasurementFrame, n: u64) -> Result<SnappedFrame> {
    validate_modulus(n)?;
    let snaps = frame.relative_angles().map(|theta| Snap::new(theta, n));
    let quadruple = CorrelationQuadruple::defined(std::array::from_fn(|k| snaps[k].correlation.clone()));
    Ok(SnappedFrame { snaps, quadruple })
}

/// Whether `c_k = −cos θ_k` for four coplanar-or-not unit vectors `a0, a1, b0, b1`.
///
/// Tests `|c00·c01 − c10·c11| ≤ √((1−c00²)(1−c01²)) + √((1−c10²)(1−c11²))`
/// exactly, with values in `[c00, c10, c01, c11]` order.
pub fn sphere_realizable(c: &[Rational; 4]) -> bool {
    let [c00, c10, c01, c11] = c;
    let one = Rational::one();
    let x = c00 * c01 - c10 * c11;
    let p = (&one - c00.square()) * (&one - c01.square());
    let q = (&one - c10.square()) * (&one - c11.square());
    let excess = x.square() - &p - &q;
    !excess.is_positive() || excess.square() <= Rational::integer(4) * p * q
}

/// [`sphere_realizable`] for correlations `m_k / n` given as scaled integers.
pub fn sphere_realizable_scaled(m: [i64; 4], n: i64) -> bool {
    realizable_i128(m, n).unwrap_or_else(|| {
        sphere_realizable(&m.map(|v| Rational::frac(v, n)))
    })
}

fn realizable_i128(m: [i64; 4], n: i64) -> Option<bool> {
    let [c00, c10, c01, c11] = m.map(i128::from);
    let nn = (n as i128).checked_mul(n as i128)?;
    let x = c00.checked_mul(c01)?.checked_sub(c10.checked_mul(c11)?)?;
    let p = (nn - c00 * c00).checked_mul(nn - c01 * c01)?;
    let q = (nn - c10 * c10).checked_mul(nn - c11 * c11)?;
    let excess = x.checked_mul(x)?.checked_sub(p)?.checked_sub(q)?;
    if excess <= 0 {
        return Some(true);
    }
    Some(excess.checked_mul(excess)? <= p.checked_mul(q)?.checked_mul(4)?)
}
