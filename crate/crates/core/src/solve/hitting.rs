use fixedbitset::FixedBitSet;

/// Minimum hitting set: choose the fewest candidates such that every
/// constraint contains a chosen candidate.
#[derive(Clone, Debug)]
pub struct HittingSet {
    candidates: usize,
    /// per constraint, the candidates that hit it
    constraints: Vec<FixedBitSet>,
    /// per candidate, the constraints it hits
    hits: Vec<FixedBitSet>,
}

impl HittingSet {
    pub fn new(candidates: usize, constraints: Vec<Vec<usize>>) -> Self {
        let mut rows = Vec::with_capacity(constraints.len());
        let mut hits = vec![FixedBitSet::with_capacity(constraints.len()); candidates];
        for (c, members) in constraints.iter().enumerate() {
            let mut row = FixedBitSet::with_capacity(candidates);
            for &a in members {
                row.insert(a);
                hits[a].insert(c);
            }
            rows.push(row);
        }
        HittingSet {
            candidates,
            constraints: rows,
            hits,
        }
    }

    /// A minimum hitting set as sorted candidate indices, or `None` when some
    /// constraint has no candidate. Search stops as soon as a solution of size
    /// `lower_bound` is found, so the bound must be valid.
    pub fn solve(&self, lower_bound: usize) -> Option<Vec<usize>> {
        if self.constraints.iter().any(|c| c.is_clear()) {
            return None;
        }
        let mut unhit = FixedBitSet::with_capacity(self.constraints.len());
        unhit.insert_range(..);
        let mut allowed = FixedBitSet::with_capacity(self.candidates);
        allowed.insert_range(..);

        let mut search = Search {
            problem: self,
            best: self.greedy(),
            stop_at: lower_bound,
        };
        if search.best.len() > lower_bound {
            let mut current = Vec::new();
            search.run(&unhit, &allowed, &mut current);
        }
        let mut best = search.best;
        best.sort_unstable();
        Some(best)
    }

    /// Repeatedly picks the candidate hitting the most unhit constraints.
    fn greedy(&self) -> Vec<usize> {
        let mut unhit = FixedBitSet::with_capacity(self.constraints.len());
        unhit.insert_range(..);
        let mut chosen = Vec::new();
        while !unhit.is_clear() {
            let a = (0..self.candidates)
                .max_by_key(|&a| (self.hits[a].intersection_count(&unhit), usize::MAX - a))
                .expect("feasible");
            unhit.difference_with(&self.hits[a]);
            chosen.push(a);
        }
        chosen
    }
}

struct Search<'a> {
    problem: &'a HittingSet,
    best: Vec<usize>,
    stop_at: usize,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.best.len() <= self.stop_at
    }

    fn run(&mut self, unhit: &FixedBitSet, allowed: &FixedBitSet, current: &mut Vec<usize>) {
        if unhit.is_clear() {
            if current.len() < self.best.len() {
                self.best = current.clone();
            }
            return;
        }
        if current.len() + 1 >= self.best.len() {
            return;
        }
        let Some(bound) = self.lower_bound(unhit, allowed) else {
            return;
        };
        if current.len() + bound >= self.best.len() {
            return;
        }

        // branch on the unhit constraint with the fewest remaining candidates
        let p = self.problem;
        let branch = unhit
            .ones()
            .min_by_key(|&c| p.constraints[c].intersection_count(allowed))
            .expect("non-empty");
        let mut options: Vec<usize> = p.constraints[branch].intersection(allowed).collect();
        options.sort_by_key(|&a| (usize::MAX - p.hits[a].intersection_count(unhit), a));

        let mut still_allowed = allowed.clone();
        for a in options {
            let mut next = unhit.clone();
            next.difference_with(&p.hits[a]);
            current.push(a);
            self.run(&next, &still_allowed, current);
            current.pop();
            if self.done() {
                return;
            }
            // later branches exclude the candidates already tried here
            still_allowed.set(a, false);
        }
    }

    /// Maximum of a greedy packing of pairwise candidate-disjoint constraints
    /// and `ceil(|unhit| / max hits per candidate)`. `None` if some unhit
    /// constraint has no allowed candidate.
    fn lower_bound(&self, unhit: &FixedBitSet, allowed: &FixedBitSet) -> Option<usize> {
        let p = self.problem;
        let mut used = FixedBitSet::with_capacity(p.candidates);
        let mut packing = 0;
        for c in unhit.ones() {
            let mut avail = p.constraints[c].clone();
            avail.intersect_with(allowed);
            if avail.is_clear() {
                return None;
            }
            if avail.is_disjoint(&used) {
                packing += 1;
                used.union_with(&avail);
            }
        }
        let widest = allowed
            .ones()
            .map(|a| p.hits[a].intersection_count(unhit))
            .max()
            .unwrap_or(0);
        let remaining = unhit.count_ones(..);
        let by_volume = if widest == 0 {
            return None;
        } else {
            remaining.div_ceil(widest)
        };
        Some(packing.max(by_volume))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        // triangle edges as constraints over 3 vertices: vertex cover of K3 is 2
        let hs = HittingSet::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(hs.solve(0).unwrap().len(), 2);
        let hs = HittingSet::new(2, vec![vec![0], vec![]]);
        assert!(hs.solve(0).is_none());
        let hs = HittingSet::new(4, vec![]);
        assert_eq!(hs.solve(0).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn matches_brute_force() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..200 {
            let candidates = 1 + rng.below(10) as usize;
            let count = rng.below(12) as usize;
            let constraints: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let mut c: Vec<usize> =
                        (0..candidates).filter(|_| rng.bernoulli(1, 3)).collect();
                    if c.is_empty() {
                        c.push(rng.below(candidates as u64) as usize);
                    }
                    c
                })
                .collect();
            let brute = (0u32..1 << candidates)
                .filter(|mask| {
                    constraints
                        .iter()
                        .all(|c| c.iter().any(|&a| mask & (1 << a) != 0))
                })
                .map(|m| m.count_ones() as usize)
                .min()
                .unwrap();
            let got = HittingSet::new(candidates, constraints.clone())
                .solve(0)
                .unwrap();
            assert_eq!(got.len(), brute);
            assert!(constraints
                .iter()
                .all(|c| c.iter().any(|a| got.contains(a))));
        }
    }
}
