use chsh_exact::bell::{
    chsh_evaluate, chsh_scan_grid, quadruple_from_frame, snap_count, sphere_realizable, sphere_realizable_scaled,
    Correlation, CorrelationQuadruple, MeasurementFrame,
};
use chsh_exact::exact_arith::niven_classify;
use chsh_exact::{PiAngle, Rational};
use proptest::prelude::*;

const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

fn asin_margin(c: [f64; 4]) -> f64 {
    let a = c.map(f64::asin);
    let total: f64 = a.iter().sum();
    a.iter().map(|&aj| std::f64::consts::PI - (total - 2.0 * aj).abs()).fold(f64::INFINITY, f64::min)
}

fn angle() -> impl Strategy<Value = PiAngle> {
    (1u64..120, 0i64..240).prop_map(|(b, a)| PiAngle::new(a % (2 * b as i64), b).unwrap())
}

fn correlation() -> impl Strategy<Value = Rational> {
    (1i64..60).prop_flat_map(|d| (-d..=d).prop_map(move |n| Rational::frac(n, d)))
}

proptest! {
    #[test]
    fn realizability_matches_arcsine_criterion(c in [correlation(), correlation(), correlation(), correlation()]) {
        let margin = asin_margin(c.clone().map(|v| v.to_f64()));
        prop_assume!(margin.abs() > 1e-9);
        prop_assert_eq!(sphere_realizable(&c), margin > 0.0);
    }

    #[test]
    fn scaled_realizability_agrees(m in [-520i64..=520, -520i64..=520, -520i64..=520, -520i64..=520]) {
        prop_assert_eq!(
            sphere_realizable_scaled(m, 520),
            sphere_realizable(&m.map(|v| Rational::frac(v, 520)))
        );
    }

    #[test]
    fn snapping_always_defined(p in [angle(), angle(), angle(), angle()], n in prop::sample::select(vec![4u64, 12, 52, 520])) {
        let frame = MeasurementFrame::from_positions(p);
        let snapped = quadruple_from_frame(&frame, n).unwrap();
        prop_assert!(snapped.quadruple.values().is_some());
        let s = chsh_evaluate(&snapped.quadruple);
        prop_assert!(s.value().unwrap().abs() <= Rational::integer(4));
        for (snap, theta) in snapped.snaps.iter().zip(frame.relative_angles()) {
            let target = n as f64 * (1.0 + theta.radians().cos()) / 2.0;
            prop_assert!((snap.n1 as f64 - target).abs() <= 0.5 + 1e-9);
            prop_assert_eq!(snap.n1, snap_count(&theta, n));
        }
    }

    #[test]
    fn undefined_entries_propagate(vals in [correlation(), correlation(), correlation(), correlation()], k in 0usize..4) {
        let defined = CorrelationQuadruple::defined(vals.clone());
        let result = chsh_evaluate(&defined);
        let [c00, c10, c01, c11] = vals.clone();
        prop_assert_eq!(result.value(), Some(&(c00 + c10 + c01 - c11).abs()));
        let mut entries = vals.map(Correlation::Defined);
        entries[k] = Correlation::from_cos(niven_classify(&PiAngle::new(1, 4).unwrap()));
        let broken = chsh_evaluate(&CorrelationQuadruple::from_array(entries));
        prop_assert!(!broken.is_defined());
        prop_assert!(broken.witness().is_some());
    }
}

#[test]
fn scans_stay_within_tsirelson() {
    for n in [4u64, 12, 16, 28, 52] {
        for g in [12u64, 30, 60] {
            let r = chsh_scan_grid(n, g).unwrap();
            let s = r.s().to_f64();
            assert!(s <= TSIRELSON + 1e-9, "N = {n}, G = {g}: {s}");
            assert!(*r.s() <= r.unconstrained);
            let values = r.snapped.quadruple.values().unwrap();
            assert!(sphere_realizable(&values));
            assert!(asin_margin(values.map(|v| v.to_f64())) >= -1e-9);
        }
    }
}

#[test]
fn scan_independent_of_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| chsh_scan_grid(52, 90).unwrap())
    };
    let one = run(1);
    for threads in [2, 4] {
        assert_eq!(run(threads), one);
    }
}
