use chsh_exact::padic_geometry::{
    gp_distance, padic_norm, CantorGeometry, CantorPoint, PythagoreanPrime, StateSpacePoint,
};
use chsh_exact::Rational;
use proptest::prelude::*;

fn geometry(p: u64) -> CantorGeometry {
    CantorGeometry::with_default_contraction(PythagoreanPrime::new(p).unwrap())
}

fn digits(p: u64, depth: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..p, depth)
}

fn point(p: u64, depth: usize) -> impl Strategy<Value = StateSpacePoint> {
    prop_oneof![
        digits(p, depth).prop_map(|d| StateSpacePoint::OnSet(CantorPoint::new(d).unwrap())),
        (-9i64..9, 1i64..5, -9i64..9, 1i64..5)
            .prop_map(|(a, b, c, d)| StateSpacePoint::OffSet(Rational::frac(a, b), Rational::frac(c, d))),
    ]
}

fn sq_dist(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    (&a.0 - &b.0).square() + (&a.1 - &b.1).square()
}

/// Triples drawn from a small pool so that repeated points occur.
fn triple(p: u64, depth: usize) -> impl Strategy<Value = [StateSpacePoint; 3]> {
    prop::collection::vec(point(p, depth), 3)
        .prop_flat_map(|pool| (Just(pool), [0usize..3, 0usize..3, 0usize..3]))
        .prop_map(|(pool, idx)| idx.map(|i| pool[i].clone()))
}

fn check_axioms(pts: &[StateSpacePoint; 3], geom: &CantorGeometry) -> Result<(), TestCaseError> {
    let d = |i: usize, j: usize| gp_distance(&pts[i], &pts[j], geom).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            prop_assert!(d(i, j).squared() >= &Rational::zero());
            prop_assert_eq!(d(i, j), d(j, i));
            prop_assert_eq!(d(i, j).is_zero(), pts[i] == pts[j]);
        }
    }
    for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        prop_assert!(d(x, z).le_sum(&d(x, y), &d(y, z)));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn metric_axioms_p5(pts in triple(5, 4)) {
        check_axioms(&pts, &geometry(5))?;
    }

    #[test]
    fn metric_axioms_p13(pts in triple(13, 3)) {
        check_axioms(&pts, &geometry(13))?;
    }
}

proptest! {
    #[test]
    fn every_tag_combination(
        on in prop::collection::vec(digits(5, 3), 3),
        off in prop::collection::vec((-5i64..5, 1i64..4), 3),
        mask in 0usize..8,
    ) {
        let pts: [StateSpacePoint; 3] = std::array::from_fn(|i| {
            if mask & (1 << i) != 0 {
                StateSpacePoint::OnSet(CantorPoint::new(on[i].clone()).unwrap())
            } else {
                StateSpacePoint::OffSet(Rational::frac(off[i].0, off[i].1), Rational::zero())
            }
        });
        check_axioms(&pts, &geometry(5))?;
    }

    #[test]
    fn prefix_agreement_bounds_distance(
        p in prop::sample::select(vec![5u64, 13, 29]),
        seed in prop::collection::vec(0u64..1000, 10),
        k in 0usize..5,
    ) {
        let geom = geometry(p);
        let depth = 5;
        let x: Vec<u64> = seed[..depth].iter().map(|d| d % p).collect();
        let mut y: Vec<u64> = seed[depth..].iter().map(|d| d % p).collect();
        y[..k].copy_from_slice(&x[..k]);
        if y[k] == x[k] {
            y[k] = (x[k] + 1) % p;
        }
        let (ex, ey) = (
            geom.embed(&CantorPoint::new(x).unwrap()).unwrap(),
            geom.embed(&CantorPoint::new(y).unwrap()).unwrap(),
        );
        let dist_sq = sq_dist(&ex, &ey);
        let s = geom.contraction().clone();
        let one = Rational::integer(1);
        let sk = s.pow(k as i32);
        let upper = Rational::integer(2) * &sk / (&one - &s);
        prop_assert!(dist_sq <= upper.square());
        // A rational lower bound on the digit separation.
        let sep_sq = geom.min_separation_sq();
        let mut sep = Rational::frac((sep_sq.to_f64().sqrt() * 1e6) as i64, 1_000_000);
        while sep.square() > sep_sq {
            sep = sep - Rational::frac(1, 1_000_000);
        }
        let c = sep - Rational::integer(2) * &s / (&one - &s);
        prop_assert!(c.is_positive());
        prop_assert!(dist_sq >= (c * sk).square());
    }
}

#[test]
fn ultrametric_norm_exhaustive() {
    let mut values = Vec::new();
    for n in -30i64..=30 {
        for d in 1i64..=12 {
            values.push(Rational::frac(n, d));
        }
    }
    values.sort();
    values.dedup();
    for p in [2u64, 3, 5] {
        let norms: Vec<Rational> = values.iter().map(|v| padic_norm(v, p).unwrap()).collect();
        for (x, nx) in values.iter().zip(&norms) {
            for (y, ny) in values.iter().zip(&norms) {
                let sum = padic_norm(&(x + y), p).unwrap();
                let max = nx.max(ny);
                assert!(sum <= *max, "|{x} + {y}|_{p}");
                if nx != ny {
                    assert_eq!(&sum, max);
                }
            }
        }
    }
}

#[test]
fn embedding_is_injective_for_small_depths() {
    let geom = geometry(5);
    for depth in 1..=4u32 {
        let mut images = Vec::new();
        for code in 0..5u64.pow(depth) {
            let digits = (0..depth).map(|i| code / 5u64.pow(i) % 5).collect();
            images.push(geom.embed(&CantorPoint::new(digits).unwrap()).unwrap());
        }
        let total = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), total, "depth {depth}");
    }
}
