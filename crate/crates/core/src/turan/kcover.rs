//! K_{r+1}^r-covers: edge sets meeting every complete r-graph on r+1
//! vertices, chosen by rules on the part counts of a vertex partition.

use fixedbitset::FixedBitSet;

use crate::combin::{binomial, lex_rank, subsets};
use crate::error::{Error, Result};
use crate::hypergraph::{fmt_set, Hypergraph};
use crate::params::{cover_number, fractional_numbers};
use crate::random::MAX_RANDOM_SUBSETS;
use crate::rational::{fmt_pq, int, ratio, Rational};
use crate::rng::{PartitionAssignment, SplitMix64};

use super::exact::turan_number;

#[derive(Clone, Debug, PartialEq)]
pub struct KCoverResult {
    pub cover: Vec<Vec<u32>>,
    pub k: u32,
    /// `budget · |H|`
    pub size_bound: Rational,
    pub partition: PartitionAssignment,
    /// `j` of the family `C_j`, or 0 for the single-rule constructions
    pub family_index: usize,
    /// `|cover| <= size_bound`
    pub certified: bool,
}

impl KCoverResult {
    pub fn len(&self) -> usize {
        self.cover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cover.is_empty()
    }
}

/// Fraction of the edges the construction for `r` is guaranteed to beat.
pub fn kcover_budget(r: u32) -> Rational {
    match r {
        0 | 1 => int(1),
        2 => ratio(1, 2),
        3 => ratio(4, 9),
        4 => ratio(3, 8),
        _ => ratio(113, 243),
    }
}

/// The first k-set (in lexicographic order) all of whose r-subsets are
/// edges of `h` not in `removed`.
pub fn find_clique(h: &Hypergraph, k: u32, removed: &[Vec<u32>]) -> Result<Option<Vec<u32>>> {
    let (n, r) = (h.n(), h.r());
    let space = binomial(n.into(), r.into());
    if space > MAX_RANDOM_SUBSETS {
        return Err(Error::capacity(
            "number of r-subsets",
            space,
            MAX_RANDOM_SUBSETS,
        ));
    }
    let mut present = FixedBitSet::with_capacity(space as usize);
    for e in h.edges() {
        present.insert(lex_rank(e, n) as usize);
    }
    for e in removed {
        present.set(lex_rank(e, n) as usize, false);
    }
    if k <= r {
        return Ok(None);
    }
    let extra = (k - r) as usize;
    // every k-set is its lexicographically first r-subset plus larger
    // vertices, so scanning edges in order finds the first clique first
    for e in h.edges() {
        if !present[lex_rank(e, n) as usize] {
            continue;
        }
        let last = *e.last().unwrap_or(&0);
        let tail: Vec<u32> = (last + 1..=n).collect();
        for add in subsets(&tail, extra) {
            let mut u = e.clone();
            u.extend(add);
            if subsets(&u, r as usize).all(|s| present[lex_rank(&s, n) as usize]) {
                return Ok(Some(u));
            }
        }
    }
    Ok(None)
}

fn build(
    h: &Hypergraph,
    k: u32,
    partition: &PartitionAssignment,
    family_index: usize,
    cover: Vec<Vec<u32>>,
) -> Result<KCoverResult> {
    if let Some(u) = find_clique(h, k, &cover)? {
        return Err(Error::TheoremViolation(format!(
            "{} still spans a complete {}-graph after removing the cover",
            fmt_set(&u),
            h.r()
        )));
    }
    let size_bound = kcover_budget(h.r()) * int(h.len() as i64);
    let certified = int(cover.len() as i64) <= size_bound;
    Ok(KCoverResult {
        cover,
        k,
        size_bound,
        partition: partition.clone(),
        family_index,
        certified,
    })
}

fn check_partition(h: &Hypergraph, partition: &PartitionAssignment, parts: u32) -> Result<()> {
    if partition.len() != h.n() as usize {
        return Err(Error::InvalidArgument(format!(
            "partition covers {} vertices, hypergraph has {}",
            partition.len(),
            h.n()
        )));
    }
    if parts != 0 && partition.parts() != parts {
        return Err(Error::InvalidArgument(format!(
            "construction needs {parts} parts, got {}",
            partition.parts()
        )));
    }
    Ok(())
}

fn check_r(h: &Hypergraph, r: u32) -> Result<()> {
    if h.r() != r {
        return Err(Error::InvalidArgument(format!(
            "construction needs r = {r}, got {}",
            h.r()
        )));
    }
    Ok(())
}

/// Edges inside one part of a bipartition.
pub fn kcover_r2(h: &Hypergraph, partition: &PartitionAssignment) -> Result<KCoverResult> {
    check_r(h, 2)?;
    check_partition(h, partition, 2)?;
    let cover = h
        .edges()
        .iter()
        .filter(|e| partition.counts(e).contains(&2))
        .cloned()
        .collect();
    build(h, 3, partition, 0, cover)
}

/// Edges with all three vertices in one part, or two in `V_i` and one in
/// `V_{i+1}` (indices mod 3).
pub fn kcover_lemma41(h: &Hypergraph, partition: &PartitionAssignment) -> Result<KCoverResult> {
    check_r(h, 3)?;
    check_partition(h, partition, 3)?;
    let cover = h
        .edges()
        .iter()
        .filter(|e| lemma41_rule(&partition.counts(e)))
        .cloned()
        .collect();
    build(h, 4, partition, 0, cover)
}

pub(crate) fn lemma41_rule(c: &[u32]) -> bool {
    (0..3).any(|i| c[i] == 3 || (c[i] == 2 && c[(i + 1) % 3] == 1))
}

/// Five rules on the part counts of a 4-partition: 4, 1+1+1+1, 2+2, and
/// 3 in `V_i` with the fourth vertex in `V_{i+1}` or `V_{i+2}`.
pub fn kcover_lemma42(h: &Hypergraph, partition: &PartitionAssignment) -> Result<KCoverResult> {
    check_r(h, 4)?;
    check_partition(h, partition, 4)?;
    let cover = h
        .edges()
        .iter()
        .filter(|e| lemma42_rule(&partition.counts(e)))
        .cloned()
        .collect();
    build(h, 5, partition, 0, cover)
}

pub(crate) fn lemma42_rule(c: &[u32]) -> bool {
    let twos = c.iter().filter(|&&x| x == 2).count();
    c.contains(&4)
        || c.iter().all(|&x| x == 1)
        || twos == 2
        || (0..4).any(|i| c[i] == 3 && (c[(i + 1) % 4] == 1 || c[(i + 2) % 4] == 1))
}

/// The families `C_j = {e : (w(e) + j) mod l <= d(e)}` for `j = 0..l`, where
/// `l` is the number of parts, `d(e)` the number of parts `e` misses and
/// `w(e) = Σ_i i |e ∩ A_i|`. Every `C_j` is a K_{r+1}^r-cover and the sizes
/// satisfy `Σ_j |C_j| = |H| + Σ_i |A_i|` with `A_i` the edges missing `A_i`.
pub fn kcover_frankl_rodl(
    h: &Hypergraph,
    partition: &PartitionAssignment,
) -> Result<Vec<KCoverResult>> {
    if h.r() < 2 {
        return Err(Error::InvalidArgument("construction needs r >= 2".into()));
    }
    check_partition(h, partition, 0)?;
    let l = u64::from(partition.parts());
    let mut families = vec![Vec::new(); l as usize];
    let mut missing = 0usize;
    for e in h.edges() {
        let w = partition.weight(e);
        let d = u64::from(partition.missed_parts(e));
        for (j, family) in families.iter_mut().enumerate() {
            if (w + j as u64) % l <= d {
                family.push(e.clone());
            }
        }
    }
    for i in 0..partition.parts() {
        missing += h
            .edges()
            .iter()
            .filter(|e| e.iter().all(|&v| partition.part(v) != i))
            .count();
    }
    let total: usize = families.iter().map(Vec::len).sum();
    if total != h.len() + missing {
        return Err(Error::TheoremViolation(format!(
            "family sizes sum to {total}, expected {} + {missing}",
            h.len()
        )));
    }
    families
        .into_iter()
        .enumerate()
        .map(|(j, cover)| build(h, h.r() + 1, partition, j, cover))
        .collect()
}

/// Dispatches on `r`: bipartition for 2, the 3- and 4-part rules for 3 and
/// 4, and the 3-part families otherwise.
pub fn kcover_with(h: &Hypergraph, partition: &PartitionAssignment) -> Result<KCoverResult> {
    match h.r() {
        2 => kcover_r2(h, partition),
        3 => kcover_lemma41(h, partition),
        4 => kcover_lemma42(h, partition),
        _ => Ok(kcover_frankl_rodl(h, partition)?
            .into_iter()
            .min_by(|a, b| (a.len(), &a.cover).cmp(&(b.len(), &b.cover)))
            .expect("at least one family")),
    }
}

/// Parts used by [`kcover_with`] for an r-graph.
pub fn kcover_parts(r: u32) -> u32 {
    match r {
        2 => 2,
        4 => 4,
        _ => 3,
    }
}

/// Smallest cover over `trials` partitions drawn from `seed`; ties go to the
/// lexicographically smallest edge list, then the earliest trial. Errors if
/// even the smallest exceeds the budget.
pub fn kcover_best(h: &Hypergraph, k: u32, trials: u64, seed: u64) -> Result<KCoverResult> {
    let r = h.r();
    if r < 2 || k != r + 1 {
        return Err(Error::InvalidArgument(format!(
            "need r >= 2 and k = r + 1, got r={r} k={k}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let mut best: Option<KCoverResult> = None;
    for t in 0..trials {
        let partition = PartitionAssignment::random(
            h.n(),
            kcover_parts(r),
            &mut SplitMix64::for_trial(seed, t),
        );
        let result = kcover_with(h, &partition)?;
        if best
            .as_ref()
            .is_none_or(|b| (result.len(), &result.cover) < (b.len(), &b.cover))
        {
            best = Some(result);
        }
    }
    let best = best.expect("at least one trial");
    if !best.certified {
        return Err(Error::BudgetNotMet {
            budget: fmt_pq(&kcover_budget(r)),
            best: best.len(),
            total: h.len(),
        });
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq)]
pub struct JstarRecord {
    pub tau: usize,
    pub nustar: Rational,
    /// `ex_m(r, m+1)`
    pub exbound: u64,
    pub satisfied: bool,
}

/// Checks `τ^(m) <= ex_m(r, m+1) · ν*^(m)` on one hypergraph.
pub fn jstar_bound_check(h: &Hypergraph, m: u32) -> Result<JstarRecord> {
    if m == 0 || m >= h.r() {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m < r, got m={m} r={}",
            h.r()
        )));
    }
    let exbound = turan_number(h.r(), m, m + 1)?;
    let tau = cover_number(h, m)?.value;
    let nustar = fractional_numbers(h, m)?.value;
    let satisfied = int(tau as i64) <= int(exbound as i64) * &nustar;
    Ok(JstarRecord {
        tau,
        nustar,
        exbound,
        satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn all_assignments(parts: u32, r: usize) -> impl Iterator<Item = Vec<u32>> {
        (0..r).map(|_| 0..parts).multi_cartesian_product()
    }

    fn counts(parts: u32, a: &[u32]) -> Vec<u32> {
        let mut c = vec![0; parts as usize];
        for &p in a {
            c[p as usize] += 1;
        }
        c
    }

    #[test]
    fn rule_probabilities_by_enumeration() {
        let hits41 = all_assignments(3, 3)
            .filter(|a| lemma41_rule(&counts(3, a)))
            .count();
        assert_eq!(hits41, 12); // 12/27 = 4/9
        let hits42 = all_assignments(4, 4)
            .filter(|a| lemma42_rule(&counts(4, a)))
            .count();
        assert_eq!(hits42, 96); // 96/256 = 3/8
    }

    #[test]
    fn balanced_partition_of_k9() {
        let h = Hypergraph::complete(9, 3).unwrap();
        let c = kcover_lemma41(&h, &PartitionAssignment::balanced(9, 3)).unwrap();
        // 3 monochromatic triples plus 3 · C(3,2) · 3 triples of type 2+1
        assert_eq!(c.len(), 3 + 3 * 3 * 3);
    }

    #[test]
    fn frankl_rodl_single_part_takes_everything() {
        let h = Hypergraph::complete(6, 5).unwrap();
        let fams = kcover_frankl_rodl(&h, &PartitionAssignment::balanced(6, 1)).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].len(), h.len());
    }

    #[test]
    fn frankl_rodl_identity_on_complete_8_5() {
        let h = Hypergraph::complete(8, 5).unwrap();
        for seed in 0..20 {
            let p = PartitionAssignment::random(8, 3, &mut SplitMix64::new(seed));
            assert_eq!(kcover_frankl_rodl(&h, &p).unwrap().len(), 3);
        }
    }

    #[test]
    fn best_covers() {
        let c = kcover_best(&Hypergraph::complete(7, 3).unwrap(), 4, 500, 1).unwrap();
        assert!(c.certified && c.len() <= 15);
        let c = kcover_best(&Hypergraph::complete(6, 5).unwrap(), 6, 200, 1).unwrap();
        assert!(c.certified);
        let c = kcover_best(&Hypergraph::empty(6, 3), 4, 1, 0).unwrap();
        assert!(c.is_empty() && c.certified);
        assert!(kcover_best(&Hypergraph::complete(5, 3).unwrap(), 5, 1, 0).is_err());
    }

    #[test]
    fn clique_search() {
        let h = Hypergraph::complete(5, 3).unwrap();
        assert_eq!(find_clique(&h, 4, &[]).unwrap(), Some(vec![1, 2, 3, 4]));
        let h = Hypergraph::parse("4 3\n1 2 3\n1 2 4\n1 3 4\n").unwrap();
        assert_eq!(find_clique(&h, 4, &[]).unwrap(), None);
    }

    #[test]
    fn jstar_on_seven_edge() {
        let rec = jstar_bound_check(&Hypergraph::example("seven_edge").unwrap(), 2).unwrap();
        assert_eq!(rec.tau, 4);
        assert_eq!(rec.exbound, 4);
        assert_eq!(rec.nustar, ratio(7, 2));
        assert!(rec.satisfied);
    }
}
