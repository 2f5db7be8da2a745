//! Turán numbers and partition covers on random inputs.

use hypercover::combin::binomial;
use hypercover::random::uniform_hypergraph;
use hypercover::rng::{PartitionAssignment, SplitMix64};
use hypercover::turan::{
    covering_design_number, find_clique, jstar_bound_check, kcover_best, kcover_frankl_rodl,
    kcover_with, turan_number,
};
use hypercover::Hypergraph;
use proptest::prelude::*;

#[test]
fn turan_numbers_are_monotone() {
    for r in 1..=3u32 {
        for n in r + 1..=7 {
            for k in r + 1..=n {
                let ex = turan_number(n, r, k).unwrap();
                if n > k {
                    assert!(turan_number(n - 1, r, k).unwrap() <= ex);
                }
                if k < n {
                    assert!(ex <= turan_number(n, r, k + 1).unwrap());
                }
            }
        }
    }
}

#[test]
fn known_values() {
    // ex_3(n, 4) for n = 5, 6, 7 and the Turán graph T(8, 3)
    assert_eq!(turan_number(5, 3, 4).unwrap(), 7);
    assert_eq!(turan_number(6, 3, 4).unwrap(), 14);
    assert_eq!(turan_number(7, 3, 4).unwrap(), 23);
    assert_eq!(turan_number(8, 2, 4).unwrap(), 21);
    assert_eq!(covering_design_number(7, 4, 3).unwrap(), 12);
}

#[test]
fn jstar_bounds_for_named_pairs() {
    let seven = Hypergraph::example("seven_edge").unwrap();
    assert_eq!(jstar_bound_check(&seven, 2).unwrap().exbound, 4);
    assert_eq!(jstar_bound_check(&seven, 3).unwrap().exbound, 3);
    let s3 = Hypergraph::simplex(3).unwrap();
    assert_eq!(jstar_bound_check(&s3, 2).unwrap().exbound, 2);
    assert!(jstar_bound_check(&s3, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn covers_leave_clique_free_remainders(r in 2u32..=6, extra in 1u32..=4, density in 0.1f64..1.0, seed in any::<u64>()) {
        let n = r + extra;
        let count = ((binomial(n.into(), r.into()) as f64) * density).ceil() as usize;
        let h = uniform_hypergraph(n, r, count, seed).unwrap();
        let parts = match r { 2 => 2, 4 => 4, _ => 3 };
        let p = PartitionAssignment::random(n, parts, &mut SplitMix64::new(seed));
        let c = kcover_with(&h, &p).unwrap();
        prop_assert!(find_clique(&h, r + 1, &c.cover).unwrap().is_none());
        for l in 1..=4 {
            let p = PartitionAssignment::random(n, l, &mut SplitMix64::new(seed ^ u64::from(l)));
            let families = kcover_frankl_rodl(&h, &p).unwrap();
            prop_assert_eq!(families.len(), l as usize);
            for f in &families {
                prop_assert!(find_clique(&h, r + 1, &f.cover).unwrap().is_none());
            }
        }
    }

    #[test]
    fn best_cover_certifies_with_enough_trials(r in 2u32..=4, extra in 1u32..=3, seed in any::<u64>()) {
        let h = Hypergraph::complete(r + extra, r).unwrap();
        let best = kcover_best(&h, r + 1, 200, seed).unwrap();
        prop_assert!(best.certified);
    }
}
