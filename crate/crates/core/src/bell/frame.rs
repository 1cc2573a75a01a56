use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_arith::PiAngle;

/// Setting pairs in CHSH order: `(alice, bob)` for `c00, c10, c01, c11`.
pub const PAIRS: [(usize, usize); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

/// Labels of [`PAIRS`].
pub const PAIR_LABELS: [&str; 4] = ["00", "10", "01", "11"];

fn coplanar() -> [PiAngle; 4] {
    [PiAngle::PI; 4]
}

/// Four great-circle positions plus one dihedral angle per setting pair.
///
/// Relative angles are differences of positions on a common great circle;
/// `gammas[k]` is the dihedral angle at the shared vertex used when pair `k`
/// is queried counterfactually (`π` is exactly coplanar).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MeasurementFrame {
    pub alice: [PiAngle; 2],
    pub bob: [PiAngle; 2],
    #[serde(default = "coplanar")]
    pub gammas: [PiAngle; 4],
}

impl MeasurementFrame {
    pub fn coplanar(alice: [PiAngle; 2], bob: [PiAngle; 2]) -> Self {
        MeasurementFrame {
            alice,
            bob,
            gammas: coplanar(),
        }
    }

    /// Frame from positions `[a0, a1, b0, b1]`.
    pub fn from_positions(p: [PiAngle; 4]) -> Self {
        Self::coplanar([p[0], p[1]], [p[2], p[3]])
    }

    pub fn positions(&self) -> [PiAngle; 4] {
        [self.alice[0], self.alice[1], self.bob[0], self.bob[1]]
    }

    /// Relative angle of pair `k` (in [`PAIRS`] order), folded into `[0, π]`.
    pub fn relative_angle(&self, k: usize) -> PiAngle {
        let (x, y) = PAIRS[k];
        (self.bob[y] - self.alice[x]).folded()
    }

    pub fn relative_angles(&self) -> [PiAngle; 4] {
        std::array::from_fn(|k| self.relative_angle(k))
    }

    pub fn is_coplanar(&self) -> bool {
        self.gammas.iter().all(|g| *g == PiAngle::PI)
    }

    /// The textbook optimum: relative angles `π/4, π/4, π/4, 3π/4`.
    pub fn textbook() -> Self {
        let q = |a| PiAngle::new(a, 4).expect("valid");
        Self::coplanar([q(0), q(2)], [q(1), q(-1)])
    }
}

impl fmt::Display for MeasurementFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a0={:?} a1={:?} b0={:?} b1={:?}",
            self.alice[0], self.alice[1], self.bob[0], self.bob[1]
        )
    }
}
