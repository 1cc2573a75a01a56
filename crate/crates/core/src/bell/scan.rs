//! Maximal CHSH value over coplanar frames on the grid `π/G`.
//!
//! Positions are `a0 = 0, b0 = x1, a1 = x1 + x2, b1 = x1 + x2 + x3` in grid
//! units modulo `K = 2G`, so the relative angles are `θ00 = x1`,
//! `θ10 = −x2`, `θ11 = x3` and `θ01 = x1 + x2 + x3 = −x4`. With `m[x] = N·c(x)`
//! the snapped correlation, `N·S = m[x1] + m[x2] + m[x4] − m[x3]`.
//!
//! Only frames whose snapped correlations are realizable by unit vectors
//! count. Shifting both of Bob's positions by π negates every correlation,
//! so the signed maximum equals the maximum of `|S|`.

use std::sync::atomic::{AtomicI64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::chsh::{chsh_evaluate, ChshResult};
use super::frame::MeasurementFrame;
use super::snap::{quadruple_from_frame, sphere_realizable_scaled, Snap, SnappedFrame};
use crate::error::{Error, Result};
use crate::exact_arith::{PiAngle, Rational};
use crate::hilbert::validate_modulus;

/// Default grid denominator `G` (step `π/G`).
pub const DEFAULT_GRID: u64 = 1440;

/// Best realizable frame found by a scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub n: u64,
    pub p: u64,
    pub grid: u64,
    pub frame: MeasurementFrame,
    pub snapped: SnappedFrame,
    pub result: ChshResult,
    /// `2√2 − S`.
    pub gap: f64,
    /// Largest `S` over all grid frames, realizable or not.
    pub unconstrained: Rational,
}

impl ScanReport {
    pub fn s(&self) -> &Rational {
        self.result.value().expect("snapped frames are always defined")
    }
}

#[derive(Serialize)]
struct ScanJson<'a> {
    #[serde(rename = "N")]
    n: u64,
    p: u64,
    grid: String,
    frame: &'a MeasurementFrame,
    snaps: &'a [Snap; 4],
    #[serde(rename = "S")]
    s: &'a Rational,
    #[serde(rename = "S_float")]
    s_float: f64,
    gap: f64,
    violates_bell: bool,
    within_tsirelson: bool,
    unconstrained_s: &'a Rational,
    unconstrained_s_float: f64,
}

impl Serialize for ScanReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScanJson {
            n: self.n,
            p: self.p,
            grid: format!("1/{}", self.grid),
            frame: &self.frame,
            snaps: &self.snapped.snaps,
            s: self.s(),
            s_float: self.s().to_f64(),
            gap: self.gap,
            violates_bell: self.result.violates_bell,
            within_tsirelson: self.result.within_tsirelson,
            unconstrained_s: &self.unconstrained,
            unconstrained_s_float: self.unconstrained.to_f64(),
        }
        .serialize(s)
    }
}

/// Grid denominator `G` of a step `π/G`.
pub fn grid_denominator(step: &PiAngle) -> Result<u64> {
    if step.numer() != 1 {
        return Err(Error::OutOfRange(format!("grid step {step:?} must be π/G")));
    }
    Ok(step.denom())
}

pub fn chsh_scan(n: u64, step: &PiAngle) -> Result<ScanReport> {
    chsh_scan_grid(n, grid_denominator(step)?)
}

struct Table {
    n: i64,
    k: usize,
    m: Vec<i64>,
}

impl Table {
    fn new(n: u64, g: u64) -> Self {
        let k = 2 * g as usize;
        let m = (0..k)
            .into_par_iter()
            .map(|x| Snap::new(PiAngle::new(x as i64, g).expect("valid grid"), n).scaled())
            .collect();
        Table { n: n as i64, k, m }
    }

    fn x4(&self, s: usize, x3: usize) -> usize {
        (2 * self.k - s - x3) % self.k
    }

    /// `N·S` and the four scaled correlations `[c00, c10, c01, c11]`.
    fn value(&self, x1: usize, x2: usize, x3: usize) -> (i64, [i64; 4]) {
        let x4 = self.x4((x1 + x2) % self.k, x3);
        let c = [self.m[x1], self.m[x2], self.m[x4], self.m[x3]];
        (c[0] + c[1] + c[2] - c[3], c)
    }

    fn realizable(&self, c: [i64; 4]) -> bool {
        sphere_realizable_scaled(c, self.n)
    }
}

/// Inner sweep order for one value of `s = x1 + x2`: `x3` sorted by
/// `m[x4] − m[x3]` descending, ties by `x3` ascending.
fn sweep_order(t: &Table, s: usize) -> Vec<(i64, u32)> {
    let mut v: Vec<(i64, u32)> = (0..t.k)
        .map(|x3| (t.m[t.x4(s, x3)] - t.m[x3], x3 as u32))
        .collect();
    v.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    v
}

pub fn chsh_scan_grid(n: u64, g: u64) -> Result<ScanReport> {
    let prime = validate_modulus(n)?;
    if g == 0 || g > 1 << 15 {
        return Err(Error::OutOfRange(format!("grid denominator {g} outside 1..=32768")));
    }
    let t = Table::new(n, g);
    let k = t.k;
    let orders: Vec<Vec<(i64, u32)>> = (0..k).into_par_iter().map(|s| sweep_order(&t, s)).collect();

    let unconstrained = (0..k)
        .into_par_iter()
        .map(|x1| (0..k).map(|x2| t.m[x1] + t.m[x2] + orders[(x1 + x2) % k][0].0).max().unwrap())
        .max()
        .expect("nonempty grid");

    // Candidates are ranked by the packed key `N·S·K³ + (K³ − 1 − index)`,
    // index = (x1·K + x2)·K + x3: larger value first, then lexicographically
    // smallest triple. Pruning against the running key is exact.
    let cube = (k as i64).pow(3);
    let key = |v: i64, x1: usize, x2: usize, x3: usize| v * cube + (cube - 1 - ((x1 * k + x2) * k + x3) as i64);

    // Floor from the symmetric family θ00 = θ10 = θ01 = y, θ11 = 3y.
    let floor = (0..k)
        .map(|y| (y, t.value(y, y, (3 * k - 3 * y) % k)))
        .filter(|&(_, (_, c))| t.realizable(c))
        .map(|(y, (v, _))| key(v, y, y, (3 * k - 3 * y) % k))
        .max()
        .expect("y = 0 is realizable");
    let best = AtomicI64::new(floor);

    (0..k).into_par_iter().for_each(|x1| {
        for x2 in 0..k {
            let base = t.m[x1] + t.m[x2];
            let order = &orders[(x1 + x2) % k];
            if key(base + order[0].0, x1, x2, 0) < best.load(Ordering::Relaxed) {
                continue;
            }
            // Realizability depends only on the values; coarse grids repeat them.
            let mut last_rejected = None;
            for &(diff, x3) in order {
                let v = base + diff;
                if key(v, x1, x2, 0) < best.load(Ordering::Relaxed) {
                    break;
                }
                let x3 = x3 as usize;
                let cand = key(v, x1, x2, x3);
                if cand <= best.load(Ordering::Relaxed) {
                    continue;
                }
                let (_, c) = t.value(x1, x2, x3);
                if last_rejected == Some((c[2], c[3])) {
                    continue;
                }
                if t.realizable(c) {
                    best.fetch_max(cand, Ordering::Relaxed);
                } else {
                    last_rejected = Some((c[2], c[3]));
                }
            }
        }
    });

    let best = best.into_inner();
    let value = best.div_euclid(cube);
    let index = (cube - 1 - best.rem_euclid(cube)) as usize;
    let found = (value, [index / (k * k), index / k % k, index % k]);
    let [x1, x2, x3] = found.1;
    let pos = |x: usize| PiAngle::new(x as i64, g).expect("valid grid");
    let frame = MeasurementFrame::from_positions([pos(0), pos(x1 + x2), pos(x1), pos(x1 + x2 + x3)]);
    let snapped = quadruple_from_frame(&frame, n)?;
    let result = chsh_evaluate(&snapped.quadruple);
    let s = result.value().expect("defined").clone();
    debug_assert_eq!(s, Rational::frac(found.0, n as i64));
    Ok(ScanReport {
        n,
        p: prime.p(),
        grid: g,
        frame,
        snapped,
        gap: 2.0 * std::f64::consts::SQRT_2 - s.to_f64(),
        result,
        unconstrained: Rational::frac(unconstrained, n as i64),
    })
}

/// One row of the singular-limit table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitRow {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "S_max")]
    pub s_max: Rational,
    pub gap: f64,
}

pub fn singular_limit_table(ns: &[u64], g: u64) -> Result<Vec<LimitRow>> {
    ns.iter()
        .map(|&n| {
            let r = chsh_scan_grid(n, g)?;
            Ok(LimitRow {
                n,
                s_max: r.s().clone(),
                gap: r.gap,
            })
        })
        .collect()
}

/// CSV with header `N,S_max,gap`.
pub fn limit_table_csv(rows: &[LimitRow]) -> String {
    let mut out = String::from("N,S_max,gap\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.n, r.s_max, r.gap));
    }
    out
}
