use chsh_exact::hilbert::{
    correlation_from_descriptor, descriptor_to_state, label_helix, ontic_check, state_to_descriptor,
    Correspondence, Descriptor, QubitState,
};
use chsh_exact::Rational;
use proptest::prelude::*;

const VALID: [u64; 6] = [4, 12, 16, 28, 36, 40];

#[test]
fn roundtrip_and_labels_exhaustive() {
    for n in VALID {
        for n1 in 1..=n {
            for n2 in 1..=n {
                let d = Descriptor::new(n1, n2, n).unwrap();
                let back = state_to_descriptor(&descriptor_to_state(&d), n).unwrap();
                assert_eq!(back, Correspondence::Ontic(d));
                let labels = label_helix(&d);
                assert_eq!((labels.len() as u64, labels.count_a() as u64), (n, n1));
            }
        }
    }
}

#[test]
fn correlation_formula() {
    for n in VALID {
        for n1 in 0..=n {
            let c = correlation_from_descriptor(n1, n).unwrap();
            let frac = Rational::frac(n1 as i64, n as i64);
            assert_eq!(c, -(Rational::integer(2) * frac - Rational::integer(1)));
            assert!(c.abs() <= Rational::integer(1));
        }
    }
}

#[test]
fn off_grid_states_are_not_ontic() {
    let q = QubitState::new(Rational::frac(1, 3), Rational::zero()).unwrap();
    assert_eq!(state_to_descriptor(&q, 4).unwrap(), Correspondence::NonOntic);
    assert!(matches!(state_to_descriptor(&q, 12).unwrap(), Correspondence::Ontic(_)));
}

proptest! {
    #[test]
    fn ontic_check_survives_refinement(
        n in prop::sample::select(vec![4u64, 12]),
        cuts in prop::collection::vec(0u64..=12, 0..4),
        phases in prop::collection::vec(0u64..12, 1..4),
    ) {
        // Squared amplitudes are gaps between sorted cut points of 0..=n.
        let mut cuts: Vec<u64> = cuts.into_iter().map(|c| c % (n + 1)).collect();
        cuts.extend([0, n]);
        cuts.sort();
        let amps: Vec<Rational> = cuts.windows(2).map(|w| Rational::frac((w[1] - w[0]) as i64, n as i64)).collect();
        let ph: Vec<Rational> = phases.iter().map(|&k| Rational::frac((k % n) as i64, n as i64)).collect();
        let base = ontic_check(&amps, &ph, n).unwrap();
        prop_assert!(base);
        for m in [2u64, 3, 4, 10, 13] {
            if VALID.contains(&(n * m)) || n * m == 52 || n * m == 520 {
                prop_assert!(ontic_check(&amps, &ph, n * m).unwrap());
            }
        }
    }
}
