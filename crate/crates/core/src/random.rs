//! Seeded random instances.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive};

use crate::combin::{binomial, subsets_of_range};
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::rational::Rational;
use crate::rng::SplitMix64;

/// Largest `C(n, r)` scanned by [`bernoulli_hypergraph`].
pub const MAX_RANDOM_SUBSETS: u128 = 5_000_000;

fn probability(p: &Rational) -> Result<(u64, u64)> {
    if p.is_negative() || *p > Rational::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::InvalidArgument(format!(
            "probability {p} has a huge denominator"
        ))),
    }
}

/// Each `r`-subset of `[n]` is an edge independently with probability `p`,
/// subsets visited in lexicographic order.
pub fn bernoulli_hypergraph(n: u32, r: u32, p: &Rational, seed: u64) -> Result<Hypergraph> {
    let (a, b) = probability(p)?;
    let total = binomial(n.into(), r.into());
    if total > MAX_RANDOM_SUBSETS {
        return Err(Error::capacity(
            "candidate subsets",
            total,
            MAX_RANDOM_SUBSETS,
        ));
    }
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n, got n={n} r={r}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let edges = subsets_of_range(n, r as usize).filter(|_| rng.bernoulli(a, b));
    Hypergraph::new(n, r, edges.collect::<Vec<_>>())
}

/// `count` distinct uniformly random `r`-subsets of `[n]` (all of them if
/// `count >= C(n, r)`).
pub fn uniform_hypergraph(n: u32, r: u32, count: usize, seed: u64) -> Result<Hypergraph> {
    if r == 0 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n, got n={n} r={r}"
        )));
    }
    if count as u128 >= binomial(n.into(), r.into()) {
        return Hypergraph::complete(n, r);
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = BTreeSet::new();
    let mut pool: Vec<u32> = (1..=n).collect();
    while edges.len() < count {
        // partial Fisher-Yates picks r distinct vertices
        for i in 0..r as usize {
            let j = i + rng.below((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut e = pool[..r as usize].to_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(n, r, edges)
}

/// `G(n, p)` with pairs visited in lexicographic order.
pub fn bernoulli_graph(n: u32, p: &Rational, seed: u64) -> Result<Graph> {
    let (a, b) = probability(p)?;
    let mut rng = SplitMix64::new(seed);
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.bernoulli(a, b) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, pairs)
}
