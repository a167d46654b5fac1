use dehn_core::mcg::lantern::frozen_lantern;
use dehn_core::mcg::{
    product_of, Braid, Curve, FreeAutomorphism, HalfTwist, HoleSet, MappingClass, Word,
};
use proptest::prelude::*;

fn braid_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Braid> {
    prop::collection::vec((1..rank, any::<bool>()), 0..=max_len).prop_map(|v| {
        Braid::new(v.into_iter().map(|(i, p)| {
            if p {
                HalfTwist::pos(i)
            } else {
                HalfTwist::neg(i)
            }
        }))
    })
}

fn curve_strategy() -> impl Strategy<Value = Curve> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), braid_strategy(n, 8), 1..=n, 1..=n))
        .prop_map(|(n, t, a, b)| Curve::new(n, t, a.min(b), a.max(b)).unwrap())
}

#[test]
fn canonical_twists_fix_boundary_up_to_rank_eight() {
    for n in 1..=8 {
        let delta = Word::boundary(n);
        for s in HoleSet::all_nonempty(n) {
            let c = Curve::canonical(n, s).unwrap();
            assert_eq!(c.enclosed_set(), s);
            let aut = c.positive_twist().aut();
            assert_eq!(aut.apply(&delta), delta, "curve {c}");
        }
    }
}

#[test]
fn conjugated_pair_product_is_invariant() {
    // Conjugating both α and β by powers of τ_γ leaves τ_α τ_β unchanged.
    let t = frozen_lantern();
    let n = t.alpha.rank();
    let base = t
        .alpha
        .positive_twist()
        .product(t.beta.positive_twist())
        .unwrap();
    for k in -5i64..=5 {
        let g = t.gamma.twist_braid(1).pow(k);
        let a = t.alpha.conjugate_by(&g).unwrap();
        let b = t.beta.conjugate_by(&g).unwrap();
        let p = product_of(n, [a.positive_twist(), b.positive_twist()]).unwrap();
        assert_eq!(p, base, "N = {k}");
        assert_eq!(a.enclosed_set(), t.alpha.enclosed_set());
    }
}

#[test]
fn lantern_sides_have_equal_profiles() {
    let t = frozen_lantern();
    let lhs = product_of(
        3,
        [
            t.alpha.positive_twist(),
            t.beta.positive_twist(),
            t.gamma.positive_twist(),
        ],
    )
    .unwrap();
    assert_eq!(lhs.hole_mult(), &[2, 2, 2]);
    assert!(t.holds());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_conjugated_twists_fix_boundary(c in curve_strategy()) {
        let delta = Word::boundary(c.rank());
        prop_assert_eq!(c.positive_twist().aut().apply(&delta), delta.clone());
        prop_assert_eq!(c.twist(-1).aut().apply(&delta), delta);
    }

    #[test]
    fn twist_signs_are_inverse(c in curve_strategy()) {
        let p = c.twist(1).product(&c.twist(-1)).unwrap();
        prop_assert!(p.is_identity());
        let q = c.twist(-1).product(&c.twist(1)).unwrap();
        prop_assert!(q.is_identity());
    }

    #[test]
    fn reduce_is_idempotent(n in 1usize..6, raw in prop::collection::vec(1i32..6, 0..30), signs in prop::collection::vec(any::<bool>(), 30)) {
        let letters: Vec<i32> = raw.iter().zip(&signs).map(|(&g, &s)| {
            let g = (g - 1) % n as i32 + 1;
            if s { g } else { -g }
        }).collect();
        let w = Word::from_signed(n, &letters).unwrap();
        let again = Word::reduce(n, w.letters().iter().copied()).unwrap();
        prop_assert_eq!(&again, &w);
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0].inverse(), pair[1]);
        }
    }

    #[test]
    fn compose_is_associative(
        (n, a, b, c) in (2usize..6).prop_flat_map(|n| (Just(n), braid_strategy(n, 5), braid_strategy(n, 5), braid_strategy(n, 5)))
    ) {
        let (fa, fb, fc): (FreeAutomorphism, FreeAutomorphism, FreeAutomorphism) =
            (a.automorphism(n).unwrap(), b.automorphism(n).unwrap(), c.automorphism(n).unwrap());
        let left = fa.compose(&fb).unwrap().compose(&fc).unwrap();
        let right = fa.compose(&fb.compose(&fc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hole_multiplicity_sum_counts_enclosed_holes(
        curves in (2usize..6).prop_flat_map(|n| prop::collection::vec(
            (braid_strategy(n, 6), 1..=n, 1..=n).prop_map(move |(t, a, b)| Curve::new(n, t, a.min(b), a.max(b)).unwrap()),
            0..6,
        ))
    ) {
        if let Some(first) = curves.first() {
            let n = first.rank();
            let p: MappingClass = product_of(n, curves.iter().map(|c| c.positive_twist())).unwrap();
            let total: i64 = p.hole_mult().iter().sum();
            let want: usize = curves.iter().map(|c| c.enclosed_set().len()).sum();
            prop_assert_eq!(total, want as i64);
        }
    }
}
