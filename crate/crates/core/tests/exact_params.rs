//! Exact parameters against brute force and the LP chain of inequalities.

use hypercover::combin::{binomial, subsets, subsets_of_range};
use hypercover::params::{
    complementary_slackness, cover_number, fractional_numbers, matching_number, ratio_report,
    verify_cover, Cover, FractionalCover,
};
use hypercover::random::uniform_hypergraph;
use hypercover::rational::{int, ratio};
use hypercover::tuza::{bound_factor, CoverMode};
use hypercover::{Hypergraph, MSet};
use proptest::prelude::*;

fn arb_instance(max_n: u32, max_edges: usize) -> impl Strategy<Value = (Hypergraph, u32)> {
    (2u32..=4)
        .prop_flat_map(move |r| (Just(r), r..=max_n.max(r), 1u32..=r, any::<u64>()))
        .prop_flat_map(move |(r, n, m, seed)| {
            let total = binomial(n.into(), r.into()).min(max_edges as u128) as usize;
            (Just((r, n, m, seed)), 0..=total)
        })
        .prop_map(|((r, n, m, seed), count)| (uniform_hypergraph(n, r, count, seed).unwrap(), m))
}

#[test]
fn seven_edge_needs_four_pairs() {
    let h = Hypergraph::example("seven_edge").unwrap();
    let pairs: Vec<Vec<u32>> = subsets_of_range(7, 2).collect();
    let covers = |family: &[&Vec<u32>]| {
        h.edges()
            .iter()
            .all(|e| family.iter().any(|p| p.iter().all(|v| e.contains(v))))
    };
    let idx: Vec<u32> = (0..pairs.len() as u32).collect();
    for size in 0..=3 {
        for pick in subsets(&idx, size) {
            let family: Vec<&Vec<u32>> = pick.iter().map(|&i| &pairs[i as usize]).collect();
            assert!(!covers(&family), "{size} pairs cover");
        }
    }
    assert!(subsets(&idx, 4).any(|pick| {
        let family: Vec<&Vec<u32>> = pick.iter().map(|&i| &pairs[i as usize]).collect();
        covers(&family)
    }));
    assert_eq!(cover_number(&h, 2).unwrap().value, 4);
}

#[test]
fn named_ratios() {
    let k6 = ratio_report(&Hypergraph::example("k6_quad").unwrap(), 2).unwrap();
    assert_eq!(k6.taustar_over_nu, Some(ratio(5, 2)));
    let seven = ratio_report(&Hypergraph::example("seven_edge").unwrap(), 2).unwrap();
    assert_eq!(seven.taustar_over_nu, Some(ratio(7, 2)));
    let simplex = ratio_report(&Hypergraph::simplex(3).unwrap(), 2).unwrap();
    assert_eq!(simplex.tau_over_nu, Some(int(2)));
    let empty = ratio_report(&Hypergraph::empty(4, 3), 2).unwrap();
    assert_eq!((empty.nu, empty.tau_over_nu), (0, None));
}

#[test]
fn verify_cover_examples() {
    let h = Hypergraph::example("seven_edge").unwrap();
    for m in 1..=4u32 {
        let nu = matching_number(&h, m).unwrap();
        let sets: Vec<MSet> = nu
            .witness
            .iter()
            .flat_map(|e| subsets(e, m as usize).map(MSet::new).collect::<Vec<_>>())
            .collect();
        let cert = verify_cover(&h, m, &Cover::Integral(sets), None);
        assert!(cert.verified, "m={m}");
        assert_eq!(
            cert.size,
            int((binomial(4, m.into()) as usize * nu.value) as i64)
        );
    }
    for r in 3..=6u32 {
        let s = Hypergraph::simplex(r).unwrap();
        let mut t = FractionalCover::new(r - 1);
        for x in subsets_of_range(r + 1, r as usize - 1) {
            t.add(x, &ratio(1, i64::from(r)));
        }
        let cert = verify_cover(&s, r - 1, &Cover::Fractional(t), None);
        assert!(cert.verified);
        assert_eq!(cert.size, ratio(i64::from(r) + 1, 2));
    }
    let cert = verify_cover(&h, 2, &Cover::Fractional(FractionalCover::new(2)), None);
    assert!(!cert.verified);
}

#[test]
fn general_bound_holds_for_fractional_cover_number() {
    for r in 5..=6u32 {
        for seed in 0..40 {
            let n = r + 1 + (seed % 4) as u32;
            let count = 5 + (seed as usize * 7) % 30;
            let h = uniform_hypergraph(n, r, count, seed).unwrap();
            let nu = matching_number(&h, r - 1).unwrap().value;
            let star = fractional_numbers(&h, r - 1).unwrap().value;
            assert!(star <= bound_factor(CoverMode::General, r) * int(nu as i64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn chain_of_inequalities((h, m) in arb_instance(7, 12)) {
        let nu = matching_number(&h, m).unwrap();
        let tau = cover_number(&h, m).unwrap();
        let fr = fractional_numbers(&h, m).unwrap();
        prop_assert!(int(nu.value as i64) <= fr.value);
        prop_assert!(fr.value <= int(tau.value as i64));
        prop_assert!(tau.value as u128 <= binomial(h.r().into(), m.into()) * nu.value as u128);
        // witnesses attain the values
        prop_assert_eq!(nu.witness.len(), nu.value);
        let cert = verify_cover(&h, m, &Cover::Integral(tau.witness.clone()), None);
        prop_assert!(cert.verified);
        prop_assert_eq!(fr.primal.size(), fr.value.clone());
        prop_assert_eq!(fr.dual.size(), fr.value.clone());
        prop_assert!(fr.primal.is_valid(&h) && fr.dual.is_valid(&h));
        let cs = complementary_slackness(&h, m, &fr.primal, &fr.dual);
        prop_assert!(cs.is_some());
        let cs = cs.unwrap();
        prop_assert_eq!(cs.incidence_sum, int(cs.dual_support as i64));
        if cs.dual_covers_support {
            prop_assert_eq!(int(cs.dual_support as i64), cs.binomial_value);
        }
    }

    #[test]
    fn derived_hypergraph_reduction((h, m) in arb_instance(6, 10)) {
        let d = h.derive(m).unwrap();
        prop_assert_eq!(matching_number(&h, m).unwrap().value, matching_number(&d, 1).unwrap().value);
        prop_assert_eq!(cover_number(&h, m).unwrap().value, cover_number(&d, 1).unwrap().value);
        prop_assert_eq!(fractional_numbers(&h, m).unwrap().value, fractional_numbers(&d, 1).unwrap().value);
    }

    #[test]
    fn witness_independent_of_input_order((h, m) in arb_instance(7, 12)) {
        let again = Hypergraph::new(h.n(), h.r(), h.edges().iter().rev().cloned()).unwrap();
        prop_assert_eq!(matching_number(&h, m).unwrap(), matching_number(&again, m).unwrap());
    }
}
