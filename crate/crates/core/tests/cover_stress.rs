//! Constructive covers on random instances with a planted dense block, so
//! that every matching class and bad type-2 edges actually occur.

use hypercover::combin::{binomial, subsets_of_range};
use hypercover::params::{fractional_numbers, matching_number};
use hypercover::random::uniform_hypergraph;
use hypercover::rational::int;
use hypercover::rng::SplitMix64;
use hypercover::tuza::{
    bound_factor, classify, cover_general, cover_r3, cover_r4, weak_cover, CoverMode,
};
use hypercover::Hypergraph;

fn planted(r: u32, seed: u64) -> Hypergraph {
    let mut rng = SplitMix64::for_trial(seed, u64::from(r) + 100);
    let n = r + 1 + rng.below(5) as u32;
    let total = binomial(n.into(), r.into()).min(40) as u64;
    let count = 1 + rng.below(total) as usize;
    let base = uniform_hypergraph(n, r, count, rng.next_u64()).unwrap();
    let shift = rng.below(u64::from(n - r)) as u32;
    let mut edges = base.edges().to_vec();
    for s in subsets_of_range(r + 1, r as usize) {
        if rng.below(3) > 0 {
            edges.push(s.iter().map(|v| v + shift).collect());
        }
    }
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, r, edges).unwrap()
}

#[test]
fn planted_instances_reach_every_class() {
    for r in 3..=6u32 {
        let mut classes = vec![0usize; r as usize + 1];
        let mut bad = 0;
        for seed in 0..2000 {
            let h = planted(r, seed);
            let m = matching_number(&h, r - 1).unwrap().witness;
            let s = classify(&h, &m).unwrap();
            for e in 0..s.len() {
                classes[s.class[e]] += 1;
                bad += usize::from(!s.bad[e].is_empty());
            }
        }
        assert!(classes.iter().all(|&c| c > 0), "r={r}: {classes:?}");
        assert!(bad > 0, "r={r}: no bad edges");
    }
}

#[test]
fn planted_covers_verify() {
    for r in 3..=6u32 {
        let mode = match r {
            3 => CoverMode::R3,
            4 => CoverMode::R4,
            _ => CoverMode::General,
        };
        for seed in 0..400 {
            let h = planted(r, seed);
            let nu = matching_number(&h, r - 1).unwrap().value;
            let cert = match r {
                3 => cover_r3(&h),
                4 => cover_r4(&h),
                _ => cover_general(&h),
            }
            .unwrap_or_else(|e| panic!("r={r} seed={seed}: {e}\n{}", h.serialize()));
            assert!(cert.verified);
            assert!(cert.size <= bound_factor(mode, r) * int(nu as i64));
            let weak = weak_cover(&h).unwrap();
            assert!(weak.size <= bound_factor(CoverMode::Weak, r) * int(nu as i64));
            if seed % 8 == 0 {
                let lower = fractional_numbers(&h, r - 1).unwrap().value;
                assert!(cert.size >= lower && weak.size >= lower);
            }
        }
    }
}
