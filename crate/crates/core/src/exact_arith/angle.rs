use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The angle `a·π/b`, reduced so that `gcd(a, b) = 1` and `0 <= a/b < 2`.
///
/// Text form is `a/b` (the multiple of π), e.g. `1/4` for π/4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiAngle {
    a: u64,
    b: u64,
}

impl PiAngle {
    pub const ZERO: PiAngle = PiAngle { a: 0, b: 1 };
    pub const PI: PiAngle = PiAngle { a: 1, b: 1 };
    pub const HALF_PI: PiAngle = PiAngle { a: 1, b: 2 };

    /// Builds `a·π/b` for any integer `a`, reducing modulo 2π.
    pub fn new(a: i64, b: u64) -> Result<Self> {
        if b == 0 {
            return Err(Error::ZeroDenominator);
        }
        if b > (1 << 60) {
            return Err(Error::OutOfRange(format!("angle denominator {b} too large")));
        }
        let period = 2 * b as i128;
        let a = (a as i128).rem_euclid(period) as u64;
        Ok(Self::reduced(a, b))
    }

    fn reduced(a: u64, b: u64) -> Self {
        let g = a.gcd(&b);
        if a == 0 {
            return PiAngle::ZERO;
        }
        PiAngle { a: a / g, b: b / g }
    }

    pub fn numer(&self) -> u64 {
        self.a
    }

    pub fn denom(&self) -> u64 {
        self.b
    }

    /// `2φ` reduced modulo 2π.
    pub fn double(&self) -> Self {
        PiAngle::new(2 * self.a as i64, self.b).expect("valid denominator")
    }

    /// Order of `e^{iφ}` as a root of unity: `φ = 2πk/n` with `gcd(k, n) = 1`.
    pub fn root_of_unity_order(&self) -> u64 {
        let two_b = 2 * self.b;
        two_b / self.a.gcd(&two_b)
    }

    /// The angle in `[0, π]` with the same cosine.
    pub fn folded(&self) -> Self {
        if self.a > self.b {
            PiAngle {
                a: 2 * self.b - self.a,
                b: self.b,
            }
        } else {
            *self
        }
    }

    /// Radians as a float; used for snapping and for test oracles only.
    pub fn radians(&self) -> f64 {
        std::f64::consts::PI * self.a as f64 / self.b as f64
    }

    /// `true` when the angle lies on the grid `k·π/g`.
    pub fn on_grid(&self, g: u64) -> bool {
        g.is_multiple_of(self.b)
    }
}

impl Add for PiAngle {
    type Output = PiAngle;
    fn add(self, rhs: PiAngle) -> PiAngle {
        let l = self.b.lcm(&rhs.b);
        let a = self.a as i128 * (l / self.b) as i128 + rhs.a as i128 * (l / rhs.b) as i128;
        PiAngle::new((a % (2 * l as i128)) as i64, l).expect("valid denominator")
    }
}

impl Neg for PiAngle {
    type Output = PiAngle;
    fn neg(self) -> PiAngle {
        PiAngle::new(-(self.a as i64), self.b).expect("valid denominator")
    }
}

impl Sub for PiAngle {
    type Output = PiAngle;
    fn sub(self, rhs: PiAngle) -> PiAngle {
        self + (-rhs)
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl fmt::Debug for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π/{}", self.a, self.b)
    }
}

impl FromStr for PiAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "angle (multiple of π)",
            input: s.to_string(),
        };
        let t = s.trim();
        let (a, b) = t.split_once('/').unwrap_or((t, "1"));
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        PiAngle::new(a, b).map_err(|_| bad())
    }
}

impl Serialize for PiAngle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PiAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
