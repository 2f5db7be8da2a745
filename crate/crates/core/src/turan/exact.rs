//! Exact Turán numbers `ex_r(n, k)` and covering numbers `T(n, k, r)`.

use crate::combin::{binomial, lex_rank, subsets, subsets_of_range};
use crate::error::{Error, Result};
use crate::solve::HittingSet;

/// Largest `C(n, r)` the searches accept: r-sets are tracked as bits of a `u128`.
pub const MAX_TURAN_SETS: u128 = 128;

fn check(n: u32, r: u32, k: u32) -> Result<()> {
    if r == 0 || r >= k || k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r < k <= n, got n={n} r={r} k={k}"
        )));
    }
    let sets = binomial(n.into(), r.into());
    if sets > MAX_TURAN_SETS {
        return Err(Error::capacity("number of r-sets", sets, MAX_TURAN_SETS));
    }
    Ok(())
}

/// For each k-subset of `[n]`, the bitmask of its r-subsets by lex rank.
fn clique_masks(n: u32, r: u32, k: u32) -> Vec<u128> {
    subsets_of_range(n, k as usize)
        .map(|c| subsets(&c, r as usize).fold(0u128, |mask, s| mask | 1u128 << lex_rank(&s, n)))
        .collect()
}

/// `ex_r(n, k)`: the most r-subsets of `[n]` containing no complete
/// r-graph on k vertices, by exhaustive branch and bound.
pub fn turan_number(n: u32, r: u32, k: u32) -> Result<u64> {
    check(n, r, k)?;
    Ok(turan_family(n, r, k).count_ones().into())
}

/// An extremal K_k^r-free family on `[n]` as a bitmask over lex ranks.
pub fn turan_family(n: u32, r: u32, k: u32) -> u128 {
    let mut bound = u128::MAX;
    let mut family = 0;
    for size in k..=n {
        if bound != u128::MAX {
            // averaging over the (size-1)-vertex subfamilies
            bound = bound * u128::from(size) / u128::from(size - r);
        }
        family = ExSearch::new(size, r, k, bound).run();
        bound = family.count_ones().into();
    }
    if n < k {
        family = (1u128 << binomial(n.into(), r.into())) - 1;
    }
    family
}

struct ExSearch {
    sets: usize,
    cliques: Vec<u128>,
    best: u128,
    target: u32,
}

impl ExSearch {
    fn new(n: u32, r: u32, k: u32, upper: u128) -> Self {
        let sets = binomial(n.into(), r.into()) as usize;
        let cliques = clique_masks(n, r, k);
        ExSearch {
            sets,
            cliques,
            best: 0,
            target: upper.min(sets as u128) as u32,
        }
    }

    fn run(mut self) -> u128 {
        // any nonempty family can be relabelled to contain {1..r}
        if let Some((inn, out)) = self.propagate(1, 0) {
            self.search(inn, out);
        }
        self.best
    }

    fn all(&self) -> u128 {
        if self.sets == 128 {
            u128::MAX
        } else {
            (1u128 << self.sets) - 1
        }
    }

    /// Excludes every r-set that is the last undecided member of a live
    /// clique; `None` if some clique is forced fully in.
    fn propagate(&self, inn: u128, mut out: u128) -> Option<(u128, u128)> {
        loop {
            let mut changed = false;
            for &c in &self.cliques {
                if c & out != 0 {
                    continue;
                }
                let open = c & !inn;
                if open == 0 {
                    return None;
                }
                if open.count_ones() == 1 {
                    out |= open;
                    changed = true;
                }
            }
            if !changed {
                return Some((inn, out));
            }
        }
    }

    /// Greedy count of live cliques with pairwise disjoint undecided parts;
    /// each forces a distinct exclusion.
    fn forced_exclusions(&self, inn: u128, out: u128) -> u32 {
        let mut used = 0u128;
        let mut count = 0;
        for &c in &self.cliques {
            if c & out != 0 {
                continue;
            }
            let open = c & !inn;
            if open & used == 0 {
                used |= open;
                count += 1;
            }
        }
        count
    }

    fn search(&mut self, inn: u128, out: u128) {
        let undecided = self.all() & !inn & !out;
        // branch on the live clique with the fewest undecided r-sets
        let tightest = self
            .cliques
            .iter()
            .filter(|&&c| c & out == 0)
            .map(|&c| c & !inn)
            .min_by_key(|open| open.count_ones());
        let Some(mut open) = tightest else {
            // nothing left to break: take every undecided set
            if (inn | undecided).count_ones() > self.best.count_ones() {
                self.best = inn | undecided;
            }
            return;
        };
        let ub = inn.count_ones() + undecided.count_ones() - self.forced_exclusions(inn, out);
        if ub <= self.best.count_ones() {
            return;
        }
        // exclude the i-th open member and include the ones before it
        let mut taken = 0u128;
        while open != 0 && self.best.count_ones() < self.target {
            let bit = open & open.wrapping_neg();
            open &= !bit;
            if let Some((i, o)) = self.propagate(inn | taken, out | bit) {
                self.search(i, o);
            }
            taken |= bit;
            if self.cliques.iter().any(|&c| c & !(inn | taken) == 0) {
                break;
            }
        }
    }
}

/// `T(n, k, r)`: the fewest r-subsets of `[n]` such that every k-subset
/// contains one, by a hitting-set search independent of [`turan_number`].
pub fn covering_design_number(n: u32, k: u32, r: u32) -> Result<u64> {
    check(n, r, k)?;
    let mut lower = 0u64;
    let mut value = 0u64;
    for size in k..=n {
        if value > 0 {
            lower = (value * u64::from(size)).div_ceil(u64::from(size - r));
        }
        let sets = binomial(size.into(), r.into()) as usize;
        let constraints = clique_masks(size, r, k)
            .into_iter()
            .map(|mask| (0..sets).filter(|&s| mask >> s & 1 == 1).collect())
            .collect();
        let solution = HittingSet::new(sets, constraints)
            .solve(lower.max(1) as usize)
            .expect("every k-set has an r-subset");
        value = solution.len() as u64;
    }
    Ok(value)
}

/// `T(n, k, r)` and `ex_r(n, k)` computed independently; errors unless they
/// sum to `C(n, r)`.
pub fn complement_identity(n: u32, k: u32, r: u32) -> Result<(u64, u64)> {
    let t = covering_design_number(n, k, r)?;
    let ex = turan_number(n, r, k)?;
    let total = binomial(n.into(), r.into()) as u64;
    if t + ex != total {
        return Err(Error::TheoremViolation(format!(
            "T({n},{k},{r}) = {t} and ex = {ex} do not sum to {total}"
        )));
    }
    Ok((t, ex))
}

/// Whether the r-sets in `family` (lex-rank bitmask) contain no K_k^r.
pub fn is_clique_free_mask(n: u32, r: u32, k: u32, family: u128) -> bool {
    clique_masks(n, r, k).iter().all(|&c| c & family != c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(turan_number(3, 2, 3).unwrap(), 2);
        assert_eq!(turan_number(4, 2, 3).unwrap(), 4);
        assert_eq!(turan_number(4, 3, 4).unwrap(), 3);
        assert_eq!(covering_design_number(4, 4, 3).unwrap(), 1);
        assert_eq!(covering_design_number(3, 3, 2).unwrap(), 1);
    }

    #[test]
    fn mantel_and_turan_graphs() {
        for n in 3..=8u32 {
            assert_eq!(turan_number(n, 2, 3).unwrap(), u64::from(n * n / 4));
        }
        // Turán graph T(7, 3) has 16 edges
        assert_eq!(turan_number(7, 2, 4).unwrap(), 16);
    }

    #[test]
    fn extremal_family_is_free() {
        for (n, r, k) in [(6, 3, 4), (6, 2, 4), (7, 4, 5)] {
            let f = turan_family(n, r, k);
            assert!(is_clique_free_mask(n, r, k, f));
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(turan_number(4, 3, 3).is_err());
        assert!(turan_number(4, 3, 5).is_err());
        assert!(matches!(
            turan_number(12, 4, 5),
            Err(Error::Capacity { .. })
        ));
    }
}
