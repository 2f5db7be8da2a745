use fixedbitset::FixedBitSet;

/// A maximum independent set of the graph given by `adjacency` restricted to
/// `allowed`. Branch and bound: degree-0 and degree-1 vertices are taken
/// greedily, the bound is a greedy clique cover, branching is on a vertex
/// of maximum degree.
pub fn maximum_independent_set(adjacency: &[FixedBitSet], allowed: &FixedBitSet) -> Vec<usize> {
    let mut search = Search {
        adjacency,
        best: Vec::new(),
    };
    let mut current = Vec::new();
    search.run(allowed.clone(), &mut current);
    search.best.sort_unstable();
    search.best
}

/// The lexicographically smallest index list among all maximum independent
/// sets. The result depends only on the graph, not on the search order.
pub fn lex_first_maximum_independent_set(adjacency: &[FixedBitSet]) -> Vec<usize> {
    let n = adjacency.len();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let target = maximum_independent_set(adjacency, &all).len();

    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    // vertices still compatible with `chosen`
    let mut open = all;
    for i in 0..n {
        if chosen.len() == target {
            break;
        }
        if !open.contains(i) {
            continue;
        }
        open.set(i, false);
        let mut rest = open.clone();
        rest.difference_with(&adjacency[i]);
        rest.set_range(..i, false);
        if chosen.len() + 1 + maximum_independent_set(adjacency, &rest).len() == target {
            chosen.push(i);
            open = rest;
        }
    }
    debug_assert_eq!(chosen.len(), target);
    chosen
}

struct Search<'a> {
    adjacency: &'a [FixedBitSet],
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, mut open: FixedBitSet, current: &mut Vec<usize>) {
        let mark = current.len();
        self.reduce(&mut open, current);

        if open.is_clear() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
            current.truncate(mark);
            return;
        }
        if current.len() + self.clique_cover_bound(&open) <= self.best.len() {
            current.truncate(mark);
            return;
        }

        let pivot = open
            .ones()
            .max_by_key(|&v| (self.adjacency[v].intersection_count(&open), usize::MAX - v))
            .expect("non-empty");

        let mut with = open.clone();
        with.difference_with(&self.adjacency[pivot]);
        with.set(pivot, false);
        current.push(pivot);
        self.run(with, current);
        current.pop();

        open.set(pivot, false);
        self.run(open, current);
        current.truncate(mark);
    }

    /// Takes vertices of degree 0 or 1; some maximum independent set contains each.
    fn reduce(&self, open: &mut FixedBitSet, current: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            let vertices: Vec<usize> = open.ones().collect();
            for v in vertices {
                if !open.contains(v) {
                    continue;
                }
                let mut nbrs = self.adjacency[v].clone();
                nbrs.intersect_with(open);
                match nbrs.count_ones(..) {
                    0 => {
                        open.set(v, false);
                        current.push(v);
                        changed = true;
                    }
                    1 => {
                        let u = nbrs.ones().next().unwrap();
                        open.set(v, false);
                        open.set(u, false);
                        current.push(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Number of cliques in a greedy clique cover of `open`; an independent
    /// set meets each clique at most once.
    fn clique_cover_bound(&self, open: &FixedBitSet) -> usize {
        let mut joinable: Vec<FixedBitSet> = Vec::new();
        for v in open.ones() {
            match joinable.iter_mut().find(|c| c.contains(v)) {
                Some(c) => c.intersect_with(&self.adjacency[v]),
                None => joinable.push(self.adjacency[v].clone()),
            }
        }
        joinable.len()
    }
}
