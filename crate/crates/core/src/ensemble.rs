//! Finite sub-ensembles realizing snapped correlations.
//!
//! Each setting pair gets its own sub-ensemble of `M` outcome pairs. With
//! `M = N` the ensemble is a shuffled fixed multiset holding exactly `n₁`
//! anticorrelated pairs; otherwise pairs are drawn independently with
//! anticorrelation probability `n₁/N`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bell::{chsh_evaluate, quadruple_from_frame, CorrelationQuadruple, MeasurementFrame, PAIR_LABELS};
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::hilbert::{correlation_from_descriptor, Descriptor};

/// Outcome pair `(alice, bob)`, each `±1`.
pub type Outcome = (i8, i8);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubEnsemble {
    /// Index into the CHSH pair order `00, 10, 01, 11`.
    pub pair: usize,
    pub n1: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub seed: u64,
    pub outcomes: Vec<Outcome>,
}

impl SubEnsemble {
    pub fn pair_label(&self) -> &'static str {
        PAIR_LABELS[self.pair]
    }

    pub fn descriptor(&self) -> Result<Descriptor> {
        Descriptor::new(self.n1, self.n, self.n)
    }

    pub fn anticorrelated(&self) -> usize {
        self.outcomes.iter().filter(|(a, b)| a != b).count()
    }
}

/// SplitMix64 finalizer over `seed + (pair + 1)·γ`.
pub fn derive_seed(seed: u64, pair: usize) -> u64 {
    let mut z = seed.wrapping_add((pair as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn generate_subensemble(d: &Descriptor, m: u64, seed: u64) -> Result<SubEnsemble> {
    generate_from_count(d.n1(), d.modulus(), m, seed, 0)
}

/// Sub-ensemble with anticorrelation count `n1` out of `n` (`n1 = 0` allowed).
pub fn generate_from_count(n1: u64, n: u64, m: u64, seed: u64, pair: usize) -> Result<SubEnsemble> {
    if m == 0 {
        return Err(Error::EmptyEnsemble);
    }
    if n == 0 || n1 > n {
        return Err(Error::OutOfRange(format!("n1 = {n1} outside 0..={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcomes = if m == n {
        let mut anti: Vec<bool> = (0..n).map(|i| i < n1).collect();
        let mut alice: Vec<i8> = (0..n).map(|i| if 2 * i < n { 1 } else { -1 }).collect();
        anti.shuffle(&mut rng);
        alice.shuffle(&mut rng);
        alice.into_iter().zip(anti).map(|(a, x)| (a, if x { -a } else { a })).collect()
    } else {
        (0..m)
            .map(|_| {
                let x = rng.random_range(0..n) < n1;
                let a: i8 = if rng.random::<bool>() { 1 } else { -1 };
                (a, if x { -a } else { a })
            })
            .collect()
    };
    Ok(SubEnsemble {
        pair,
        n1,
        n,
        seed,
        outcomes,
    })
}

/// `(Σ aᵢbᵢ)/M`, exact.
pub fn estimate_correlation(se: &SubEnsemble) -> Result<Rational> {
    if se.outcomes.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let sum: i64 = se.outcomes.iter().map(|&(a, b)| (a * b) as i64).sum();
    Ok(Rational::frac(sum, se.outcomes.len() as i64))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SimReport {
    pub empirical: CorrelationQuadruple,
    pub exact: CorrelationQuadruple,
    pub s_empirical: f64,
    /// `s_empirical` before conversion to a float.
    pub s_empirical_exact: Rational,
    pub s_exact: Rational,
    pub std_errs: [f64; 4],
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub seed: u64,
    #[serde(skip)]
    pub ensembles: Vec<SubEnsemble>,
}

pub fn run_chsh_experiment(frame: &MeasurementFrame, n: u64, m: u64, seed: u64) -> Result<SimReport> {
    let snapped = quadruple_from_frame(frame, n)?;
    let ensembles = (0..4)
        .map(|k| generate_from_count(snapped.snaps[k].n1, n, m, derive_seed(seed, k), k))
        .collect::<Result<Vec<_>>>()?;
    let empirical_values = ensembles
        .iter()
        .map(estimate_correlation)
        .collect::<Result<Vec<_>>>()?;
    let exact_values = snapped
        .snaps
        .each_ref()
        .map(|s| correlation_from_descriptor(s.n1, n).expect("snapped count in range"));
    let empirical = CorrelationQuadruple::defined(
        <[Rational; 4]>::try_from(empirical_values).expect("four pairs"),
    );
    let exact = CorrelationQuadruple::defined(exact_values);
    let s_emp = chsh_evaluate(&empirical).value().expect("defined").clone();
    let s_exact = chsh_evaluate(&exact).value().expect("defined").clone();
    Ok(SimReport {
        s_empirical: s_emp.to_f64(),
        s_empirical_exact: s_emp,
        s_exact,
        empirical,
        exact,
        std_errs: [1.0 / (m as f64).sqrt(); 4],
        m,
        n,
        seed,
        ensembles,
    })
}

/// Raw outcomes as CSV with header `pairId,alice,bob`.
pub fn outcomes_csv(ensembles: &[SubEnsemble]) -> String {
    let mut out = String::from("pairId,alice,bob\n");
    for e in ensembles {
        for (a, b) in &e.outcomes {
            out.push_str(&format!("{},{a},{b}\n", e.pair_label()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::PiAngle;

    #[test]
    fn exact_mode_counts() {
        for (n1, want) in [(520, Rational::integer(-1)), (260, Rational::zero()), (390, Rational::frac(-1, 2))] {
            let d = Descriptor::new(n1, 520, 520).unwrap();
            let se = generate_subensemble(&d, 520, 11).unwrap();
            assert_eq!(se.anticorrelated() as u64, n1);
            assert_eq!(se.outcomes.iter().map(|o| o.0 as i64).sum::<i64>(), 0);
            assert_eq!(estimate_correlation(&se).unwrap(), want);
        }
    }

    #[test]
    fn estimator_examples() {
        let mk = |outcomes| SubEnsemble {
            pair: 0,
            n1: 0,
            n: 4,
            seed: 0,
            outcomes,
        };
        assert_eq!(estimate_correlation(&mk(vec![(1, -1); 3])).unwrap(), Rational::integer(-1));
        assert_eq!(estimate_correlation(&mk(vec![(1, 1), (1, -1), (-1, -1), (-1, 1)])).unwrap(), Rational::zero());
        assert_eq!(estimate_correlation(&mk(vec![])), Err(Error::EmptyEnsemble));
        assert!(generate_from_count(1, 4, 0, 0, 0).is_err());
    }

    #[test]
    fn seeds_only_reorder() {
        let d = Descriptor::new(3, 4, 4).unwrap();
        let a = generate_subensemble(&d, 4, 1).unwrap();
        let b = generate_subensemble(&d, 4, 2).unwrap();
        assert_eq!(estimate_correlation(&a), estimate_correlation(&b));
        assert_eq!(generate_subensemble(&d, 4, 1).unwrap(), a);
    }

    #[test]
    fn derived_seeds_differ() {
        let s: Vec<u64> = (0..4).map(|k| derive_seed(7, k)).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                assert_ne!(s[i], s[j]);
            }
        }
    }

    #[test]
    fn right_angle_frame_has_zero_s() {
        let f = MeasurementFrame::from_positions([0, 0, 1, 1].map(|a| PiAngle::new(a, 2).unwrap()));
        let r = run_chsh_experiment(&f, 520, 520, 3).unwrap();
        assert_eq!(r.s_exact, Rational::zero());
        assert_eq!(r.s_empirical_exact, Rational::zero());
    }

    #[test]
    fn csv_rows() {
        let se = generate_from_count(1, 4, 4, 0, 1).unwrap();
        let csv = outcomes_csv(&[se]);
        assert!(csv.starts_with("pairId,alice,bob\n10,"));
        assert_eq!(csv.lines().count(), 5);
    }
}
