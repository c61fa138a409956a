mod common;

use common::{counts_bruteforce, p, pair_strategy, rpp_strategy, shapes_up_to};
use proptest::prelude::*;
use rpp_vertex::coupling::{enumerate_pairs, g_via_lozenges, PairRPP};
use rpp_vertex::rpp_core::RPP;
use rpp_vertex::sliding::{
    check_t0_constraints, forced_zero_violations, paths_of, slide, unslide, verify_t0_counting,
};
use rpp_vertex::Error;

#[test]
fn constraints_iff_no_coupled_pairs() {
    for s in shapes_up_to(4) {
        for pair in enumerate_pairs(&s, 6) {
            let g0 = g_via_lozenges(&pair).unwrap() == 0;
            assert_eq!(check_t0_constraints(&pair), g0, "{pair:?}");
            if g0 {
                assert!(forced_zero_violations(&pair).is_empty(), "{pair:?}");
                let out = slide(&pair).unwrap();
                assert_eq!(out.volume(), pair.volume());
                assert_eq!(unslide(&out).unwrap(), pair);
            } else {
                assert!(matches!(slide(&pair), Err(Error::NotNonInteracting(_))));
            }
        }
    }
}

#[test]
fn noninteracting_counts_match_brute_force_rpps() {
    for s in [p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
        let n = 6;
        let rep = verify_t0_counting(&s, n).unwrap();
        assert!(rep.holds);
        let counts = counts_bruteforce(&s, n as u64);
        for row in rep.rows {
            assert_eq!(row.noninteracting_pairs, counts[row.volume as usize]);
        }
    }
}

#[test]
fn worked_slide() {
    let s = p(&[4, 4, 3, 3, 1]);
    let pair = PairRPP::new(
        RPP::from_rows_top_down(s.clone(), vec![vec![0], vec![0, 1, 4], vec![0, 0, 2], vec![0, 0, 0, 1], vec![0, 0, 0, 0]])
            .unwrap(),
        RPP::from_rows_top_down(s.clone(), vec![vec![3], vec![2, 4, 4], vec![0, 1, 4], vec![0, 0, 2, 4], vec![0, 0, 0, 3]])
            .unwrap(),
    )
    .unwrap();
    let out = RPP::from_rows_top_down(s, vec![vec![3], vec![2, 4, 4], vec![1, 4, 4], vec![1, 2, 2, 4], vec![0, 0, 1, 3]])
        .unwrap();
    assert_eq!(slide(&pair).unwrap(), out);
    assert_eq!(unslide(&out).unwrap(), pair);
    let fam = paths_of(&out);
    assert_eq!(fam.paths.iter().map(|q| q.cells.len()).collect::<Vec<_>>(), vec![8, 5, 2]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn slide_unslide_identity(r in rpp_strategy(12, 9)) {
        let pair = unslide(&r).unwrap();
        prop_assert!(check_t0_constraints(&pair));
        prop_assert_eq!(g_via_lozenges(&pair).unwrap(), 0);
        prop_assert_eq!(slide(&pair).unwrap(), r);
    }

    #[test]
    fn constraints_match_g(pair in pair_strategy(10, 4)) {
        prop_assert_eq!(check_t0_constraints(&pair), g_via_lozenges(&pair).unwrap() == 0);
    }
}
