use dehn_core::enumerator::{enumerate_profiles, EnumOptions};
use dehn_core::factorization::MultiplicityProfile;
use dehn_core::geography::{euler_upper_bound, filling_invariants, geography_of_profile};
use dehn_core::linalg::IntMatrix;
use dehn_core::mcg::HoleSet;
use dehn_core::plumbing::{gay_mark_open_book, verify_chi_bound, PlumbingGraph, VertexId};
use proptest::prelude::*;

fn block_multiset(n: usize) -> impl Strategy<Value = Vec<HoleSet>> {
    prop::collection::vec((1u64..(1 << n)).prop_map(HoleSet::from_bits), 0..7)
}

/// Random tree with weights chosen so that every row sum is `-t_i <= 0`.
fn tree_strategy() -> impl Strategy<Value = PlumbingGraph> {
    (1usize..=5)
        .prop_flat_map(|v| {
            (
                Just(v),
                prop::collection::vec(any::<prop::sample::Index>(), v.saturating_sub(1)),
                prop::collection::vec(0i64..=3, v),
            )
        })
        .prop_filter_map("needs a boundary disk", |(v, parents, t)| {
            if t.iter().sum::<i64>() == 0 {
                return None;
            }
            let edges: Vec<(VertexId, VertexId)> = parents
                .iter()
                .enumerate()
                .map(|(k, p)| (p.index(k + 1) as VertexId + 1, k as VertexId + 2))
                .collect();
            let deg = |i: VertexId| edges.iter().filter(|&&(a, b)| a == i || b == i).count() as i64;
            let vertices = (1..=v as VertexId)
                .map(|i| (i, -(deg(i) + t[i as usize - 1])))
                .collect();
            Some(PlumbingGraph::new(vertices, edges).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn filling_identities(
        (n, blocks) in (1usize..=5).prop_flat_map(|n| (Just(n), block_multiset(n)))
    ) {
        let p = MultiplicityProfile::from_blocks(n, &blocks);
        let bound = euler_upper_bound(&p);
        let g = geography_of_profile(&p, &EnumOptions::default()).unwrap();
        prop_assert!(!g.points.is_empty());
        for (pt, witnesses) in &g.points {
            prop_assert!(pt.chi <= bound);
            for (_, inv) in witnesses {
                prop_assert_eq!(inv.sigma + inv.chi, 1 - inv.b1);
                prop_assert_eq!((inv.sigma, inv.chi), (pt.sigma, pt.chi));
            }
        }
    }

    #[test]
    fn required_blocks_shrink_geography(
        (n, blocks, pick) in (2usize..=4).prop_flat_map(|n| (Just(n), block_multiset(n), any::<prop::sample::Index>()))
    ) {
        prop_assume!(!blocks.is_empty());
        let p = MultiplicityProfile::from_blocks(n, &blocks);
        let all = geography_of_profile(&p, &EnumOptions::default()).unwrap();
        let opts = EnumOptions { required_blocks: vec![blocks[pick.index(blocks.len())]], ..Default::default() };
        let some = geography_of_profile(&p, &opts).unwrap();
        prop_assert!(some.points.len() <= all.points.len());
        prop_assert!(some.points.keys().all(|k| all.points.contains_key(k)));
    }

    #[test]
    fn smith_divisors_multiply_to_determinant(
        (n, blocks) in (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec((1u64..(1 << n)).prop_map(HoleSet::from_bits), n)))
    ) {
        let rows: Vec<Vec<i64>> = (1..=n).map(|i| blocks.iter().map(|b| b.contains(i) as i64).collect()).collect();
        let m = IntMatrix::from_rows(n, &rows).unwrap();
        let det = m.determinant().unwrap();
        prop_assume!(det != 0);
        let divisors = m.smith_divisors().unwrap();
        prop_assert_eq!(divisors.len(), n);
        prop_assert_eq!(divisors.iter().product::<i128>(), det.abs());
        for w in divisors.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        let inv = filling_invariants(n, &blocks).unwrap();
        prop_assert_eq!(inv.b1, 0);
        prop_assert_eq!(inv.h1_torsion.iter().product::<i128>(), det.abs());
    }

    #[test]
    fn open_books_satisfy_the_count_bound(g in tree_strategy()) {
        let (page, f) = gay_mark_open_book(&g).unwrap();
        let (page2, f2) = gay_mark_open_book(&g).unwrap();
        prop_assert_eq!(&page, &page2);
        prop_assert!(f.same_presentation(&f2));
        for a in &page.neck_curves {
            for b in &page.neck_curves {
                let (x, y) = (a.enclosed, b.enclosed);
                prop_assert!(x.is_subset(y) || y.is_subset(x) || x.is_disjoint(y));
            }
        }
        let p = f.profile();
        prop_assume!(page.holes <= 6 && p.total() <= 12);
        let r = verify_chi_bound(&g, &EnumOptions::default()).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.chi_z - r.max_chi_x, r.k as i64 - r.max_m as i64);
        let sols = enumerate_profiles(&p, &EnumOptions::default()).unwrap();
        let mut given = f.enclosed_multiset();
        given.sort();
        prop_assert!(sols.iter().any(|s| s.blocks() == &given[..]));
    }
}
