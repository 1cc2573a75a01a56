use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cantor::{CantorGeometry, CantorPoint};
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// A point of the planar state space: on the Cantor set or off it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StateSpacePoint {
    OnSet(CantorPoint),
    OffSet(Rational, Rational),
}

/// Exact nonnegative distance, stored as its square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Distance {
    squared: Rational,
}

impl Distance {
    pub fn zero() -> Self {
        Distance {
            squared: Rational::zero(),
        }
    }

    pub fn from_value(v: &Rational) -> Result<Self> {
        if v.is_negative() {
            return Err(Error::OutOfRange(format!("negative distance {v}")));
        }
        Ok(Distance { squared: v.square() })
    }

    pub fn from_squared(squared: Rational) -> Result<Self> {
        if squared.is_negative() {
            return Err(Error::NegativeRadicand(squared.to_string()));
        }
        Ok(Distance { squared })
    }

    pub fn squared(&self) -> &Rational {
        &self.squared
    }

    pub fn is_zero(&self) -> bool {
        self.squared.is_zero()
    }

    /// The distance itself when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        self.squared.sqrt_exact()
    }

    pub fn to_f64(&self) -> f64 {
        self.squared.to_f64().sqrt()
    }

    /// Exact test of `self ≤ a + b`.
    pub fn le_sum(&self, a: &Distance, b: &Distance) -> bool {
        // √x ≤ √a + √b  ⟺  x − a − b ≤ 0  or  (x − a − b)² ≤ 4ab
        let excess = &self.squared - &a.squared - &b.squared;
        !excess.is_positive() || excess.square() <= Rational::integer(4) * &a.squared * &b.squared
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        self.squared.cmp(&other.squared)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Some(r) => write!(f, "{r}"),
            None => write!(f, "sqrt({})", self.squared),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The state-space metric: normalized Euclidean on the Cantor set, `p` elsewhere.
pub fn gp_distance(x: &StateSpacePoint, y: &StateSpacePoint, geometry: &CantorGeometry) -> Result<Distance> {
    use StateSpacePoint::*;
    let p = geometry.prime().p();
    for pt in [x, y] {
        if let OnSet(c) = pt {
            c.check_base(p)?;
        }
    }
    if let (OnSet(a), OnSet(b)) = (x, y) {
        if a.depth() != b.depth() {
            return Err(Error::Incompatible(format!(
                "Cantor points of depth {} and {}",
                a.depth(),
                b.depth()
            )));
        }
        if a == b {
            return Ok(Distance::zero());
        }
        let (ax, ay) = geometry.embed(a)?;
        let (bx, by) = geometry.embed(b)?;
        let raw = (ax - bx).square() + (ay - by).square();
        // divide by the diameter bound 2/(1 − s)
        let one_minus_s = Rational::one() - geometry.contraction();
        let scale = one_minus_s.square() / Rational::integer(4);
        return Distance::from_squared(raw * scale);
    }
    if x == y {
        Ok(Distance::zero())
    } else {
        Distance::from_value(&Rational::integer(p as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic_geometry::PythagoreanPrime;

    fn geom5() -> CantorGeometry {
        CantorGeometry::new(PythagoreanPrime::new(5).unwrap(), Rational::frac(1, 8)).unwrap()
    }

    fn on(d: &[u64]) -> StateSpacePoint {
        StateSpacePoint::OnSet(CantorPoint::new(d.to_vec()).unwrap())
    }

    fn off(x: (i64, i64), y: (i64, i64)) -> StateSpacePoint {
        StateSpacePoint::OffSet(Rational::frac(x.0, x.1), Rational::frac(y.0, y.1))
    }

    #[test]
    fn off_set_is_discrete() {
        let g = geom5();
        let a = off((1, 2), (1, 3));
        assert!(gp_distance(&a, &a, &g).unwrap().is_zero());
        let d = gp_distance(&on(&[0, 1, 2]), &a, &g).unwrap();
        assert_eq!(d.to_string(), "5");
        assert_eq!(gp_distance(&a, &off((1, 2), (1, 4)), &g).unwrap().exact(), Some(Rational::integer(5)));
    }

    #[test]
    fn adjacent_vertices() {
        // (3/5, −4/5) to (3/5, 4/5): raw 8/5, scaled by (7/8)²/4
        let g = geom5();
        let d = gp_distance(&on(&[1]), &on(&[2]), &g).unwrap();
        assert_eq!(d.exact(), Some(Rational::frac(7, 10)));
        assert!(d.to_f64() > 0.0 && d.to_f64() <= 1.0);
        let opposite = gp_distance(&on(&[1]), &on(&[3]), &g).unwrap();
        assert_eq!(opposite.exact(), Some(Rational::frac(7, 8)));
        assert_eq!(opposite.to_string(), "7/8");
    }

    #[test]
    fn irrational_distance_display() {
        let g = geom5();
        // vertex (3/5, 4/5) to origin scaled: 7/16, rational; origin to a
        // second-level point is not
        let d = gp_distance(&on(&[0, 0]), &on(&[2, 1]), &g).unwrap();
        assert!(d.exact().is_none());
        assert!(d.to_string().starts_with("sqrt("));
    }

    #[test]
    fn rejects_mismatched_points() {
        let g = geom5();
        assert!(gp_distance(&on(&[1, 2]), &on(&[1]), &g).is_err());
        assert!(gp_distance(&on(&[7]), &off((0, 1), (0, 1)), &g).is_err());
    }

    #[test]
    fn triangle_test_is_exact() {
        let one = Distance::from_value(&Rational::one()).unwrap();
        let two = Distance::from_value(&Rational::integer(2)).unwrap();
        let three = Distance::from_value(&Rational::integer(3)).unwrap();
        assert!(three.le_sum(&one, &two));
        let slightly_more = Distance::from_squared(Rational::frac(901, 100)).unwrap();
        assert!(!slightly_more.le_sum(&one, &two));
        let r2 = Distance::from_squared(Rational::integer(2)).unwrap();
        assert!(two.le_sum(&r2, &r2));
    }
}
