use std::collections::BTreeSet;

use crate::combin::{difference, intersection, intersection_size, subsets};
use crate::error::{Error, Result};
use crate::hypergraph::{fmt_set, Hypergraph};
use crate::params::matching_number;

/// Which alternative of the type-1 dichotomy an `M`-edge falls under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Friend {
    /// all of `T_1(e)` meets `e` in the same (r-1)-set `p(e)`
    SharedSet(Vec<u32>),
    /// all of `T_1(e)` contains the vertex `v(e)` outside `e`
    ExternalVertex(u32),
    /// `T_1(e)` is empty
    None,
}

/// Structure of a maximum (r-1)-matching `M` of an r-graph.
///
/// Per-`M`-edge data is indexed by position in `matching`.
#[derive(Clone, Debug)]
pub struct MatchingStructure {
    pub r: u32,
    pub matching: Vec<Vec<u32>>,
    /// per edge of the hypergraph: the `M`-edges it meets in exactly r-1
    /// vertices (empty for edges of `M`)
    pub meets: Vec<Vec<usize>>,
    /// per edge of the hypergraph: `i` for a type-i edge, 0 for edges of `M`
    pub edge_type: Vec<usize>,
    pub type1: Vec<Vec<Vec<u32>>>,
    /// distinct indispensable (r-1)-sets, sorted
    pub indispensable: Vec<Vec<Vec<u32>>>,
    pub friend: Vec<Friend>,
    /// `i` such that the edge lies in `M_i`
    pub class: Vec<usize>,
    pub plus: Vec<bool>,
    /// `B(e)`: bad type-2 edges at `e`
    pub bad: Vec<Vec<Vec<u32>>>,
    /// for each edge of `bad[e]`, the `M`-edge on its other end
    pub bad_partner: Vec<Vec<usize>>,
}

impl MatchingStructure {
    pub fn len(&self) -> usize {
        self.matching.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matching.is_empty()
    }

    /// Indices of the `M`-edges in `M_i`.
    pub fn class_members(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.class[e] == i).collect()
    }

    pub fn minus(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| !self.plus[e]).collect()
    }

    pub fn plus_members(&self) -> Vec<usize> {
        (0..self.len()).filter(|&e| self.plus[e]).collect()
    }

    pub fn v(&self, e: usize) -> Option<u32> {
        match self.friend[e] {
            Friend::ExternalVertex(v) => Some(v),
            _ => None,
        }
    }
}

/// Classifies `matching` after checking that it is a maximum (r-1)-matching of `h`.
pub fn classify(h: &Hypergraph, matching: &[Vec<u32>]) -> Result<MatchingStructure> {
    if h.r() < 2 {
        return Err(Error::InvalidArgument("classification needs r >= 2".into()));
    }
    validate(h, matching)?;
    let maximum = matching_number(h, h.r() - 1)?.value;
    if maximum != matching.len() {
        return Err(Error::NotMaximum {
            given: matching.len(),
            maximum,
        });
    }
    classify_trusted(h, matching)
}

fn validate(h: &Hypergraph, matching: &[Vec<u32>]) -> Result<()> {
    let r = h.r() as usize;
    for e in matching {
        if !h.contains(e) {
            return Err(Error::InvalidMatching(format!(
                "{} is not an edge",
                fmt_set(e)
            )));
        }
    }
    for (i, e) in matching.iter().enumerate() {
        for f in &matching[i + 1..] {
            if intersection_size(e, f) >= r - 1 {
                return Err(Error::InvalidMatching(format!(
                    "{} and {} share at least {} vertices",
                    fmt_set(e),
                    fmt_set(f),
                    r - 1
                )));
            }
        }
    }
    Ok(())
}

fn violation(what: String) -> Error {
    Error::TheoremViolation(what)
}

/// Classification for a matching already known to be maximum.
pub(crate) fn classify_trusted(h: &Hypergraph, matching: &[Vec<u32>]) -> Result<MatchingStructure> {
    let r = h.r();
    let rm1 = r as usize - 1;
    let k = matching.len();
    let in_m: BTreeSet<&[u32]> = matching.iter().map(Vec::as_slice).collect();

    let mut meets = vec![Vec::new(); h.len()];
    let mut edge_type = vec![0; h.len()];
    for (idx, f) in h.edges().iter().enumerate() {
        if in_m.contains(f.as_slice()) {
            continue;
        }
        meets[idx] = (0..k)
            .filter(|&e| intersection_size(f, &matching[e]) == rm1)
            .collect();
        edge_type[idx] = meets[idx].len();
        if edge_type[idx] == 0 {
            return Err(violation(format!(
                "edge {} extends the matching, so it is not maximum",
                fmt_set(f)
            )));
        }
    }

    let mut type1 = vec![Vec::new(); k];
    for (idx, f) in h.edges().iter().enumerate() {
        if edge_type[idx] == 1 {
            type1[meets[idx][0]].push(f.clone());
        }
    }

    let mut indispensable = Vec::with_capacity(k);
    let mut friend = Vec::with_capacity(k);
    for (e, edge) in matching.iter().enumerate() {
        let t1 = &type1[e];
        // no two type-1 edges at e may be (r-1)-disjoint
        for (i, f) in t1.iter().enumerate() {
            for g in &t1[i + 1..] {
                if intersection_size(f, g) < rm1 {
                    return Err(violation(format!(
                        "type-1 edges {} and {} at {} meet in fewer than {rm1} vertices",
                        fmt_set(f),
                        fmt_set(g),
                        fmt_set(edge)
                    )));
                }
            }
        }
        let sets: BTreeSet<Vec<u32>> = t1.iter().map(|f| intersection(f, edge)).collect();
        let sets: Vec<Vec<u32>> = sets.into_iter().collect();
        let outside: BTreeSet<u32> = t1.iter().map(|f| difference(f, edge)[0]).collect();
        let fr = match sets.len() {
            0 => Friend::None,
            1 => {
                if t1.len() > 1 && outside.len() == 1 {
                    return Err(violation(format!(
                        "{}: type-1 edges share both an (r-1)-set and an outside vertex",
                        fmt_set(edge)
                    )));
                }
                Friend::SharedSet(sets[0].clone())
            }
            _ => {
                if outside.len() != 1 {
                    return Err(violation(format!(
                        "{}: type-1 edges share neither an (r-1)-set nor an outside vertex",
                        fmt_set(edge)
                    )));
                }
                if t1.len() != sets.len() {
                    return Err(violation(format!(
                        "{}: {} type-1 edges but {} indispensable sets",
                        fmt_set(edge),
                        t1.len(),
                        sets.len()
                    )));
                }
                for (i, f) in t1.iter().enumerate() {
                    for g in &t1[i + 1..] {
                        if intersection_size(&intersection(f, g), edge) != rm1 - 1 {
                            return Err(violation(format!(
                                "{}: |e ∩ f ∩ g| != r-2 for {} and {}",
                                fmt_set(edge),
                                fmt_set(f),
                                fmt_set(g)
                            )));
                        }
                    }
                }
                Friend::ExternalVertex(*outside.iter().next().unwrap())
            }
        };
        indispensable.push(sets);
        friend.push(fr);
    }

    let class: Vec<usize> = indispensable.iter().map(Vec::len).collect();
    let plus: Vec<bool> = class
        .iter()
        .map(|&i| match r {
            2 => false,
            3 => i == 3,
            _ => i >= rm1,
        })
        .collect();

    let mut bad = vec![Vec::new(); k];
    let mut bad_partner = vec![Vec::new(); k];
    for (idx, g) in h.edges().iter().enumerate() {
        if edge_type[idx] != 2 {
            continue;
        }
        let (a, b) = (meets[idx][0], meets[idx][1]);
        if plus[a] && plus[b] {
            return Err(violation(format!(
                "type-2 edge {} connects two M+ edges",
                fmt_set(g)
            )));
        }
        if plus[a] != plus[b] {
            bad[a].push(g.clone());
            bad_partner[a].push(b);
            bad[b].push(g.clone());
            bad_partner[b].push(a);
        }
    }

    let s = MatchingStructure {
        r,
        matching: matching.to_vec(),
        meets,
        edge_type,
        type1,
        indispensable,
        friend,
        class,
        plus,
        bad,
        bad_partner,
    };
    check_bad_edges(&s)?;
    Ok(s)
}

/// Facts about bad type-2 edges at `M^-` edges with at least one
/// indispensable set.
fn check_bad_edges(s: &MatchingStructure) -> Result<()> {
    let rm1 = s.r as usize - 1;
    for e in s.minus() {
        if s.class[e] == 0 {
            continue;
        }
        for g in &s.bad[e] {
            if let Some(f) = s.type1[e].iter().find(|f| intersection_size(g, f) < rm1) {
                return Err(violation(format!(
                    "bad edge {} misses type-1 edge {} at {}",
                    fmt_set(g),
                    fmt_set(f),
                    fmt_set(&s.matching[e])
                )));
            }
        }
        if s.class[e] >= 2 && !s.bad[e].is_empty() {
            if s.r == 3 {
                return Err(violation(format!(
                    "bad edge between M_2 edge {} and M_3",
                    fmt_set(&s.matching[e])
                )));
            }
            let v = s
                .v(e)
                .expect("two indispensable sets force an outside vertex");
            for (g, &f) in s.bad[e].iter().zip(&s.bad_partner[e]) {
                if difference(g, &s.matching[e]) != [v] {
                    return Err(violation(format!(
                        "bad edge {} does not contain v(e) = {v}",
                        fmt_set(g)
                    )));
                }
                let shared = intersection(&s.matching[e], &s.matching[f]);
                if s.indispensable[e]
                    .iter()
                    .any(|x| crate::combin::is_subset(&shared, x))
                {
                    return Err(violation(format!(
                        "an indispensable set of {} contains e ∩ f",
                        fmt_set(&s.matching[e])
                    )));
                }
            }
        }
    }
    Ok(())
}

/// (r-1)-sets `(g ∩ e ∩ f) ∪ (g \ e)` for the bad edges `g` at `e` with
/// partner `f`; every edge of `B(e)` contains one of them.
pub(crate) fn bad_edge_hitting_sets(s: &MatchingStructure, e: usize) -> Vec<Vec<u32>> {
    let edge = &s.matching[e];
    let mut out = BTreeSet::new();
    for (g, &f) in s.bad[e].iter().zip(&s.bad_partner[e]) {
        let core = intersection(&intersection(g, edge), &s.matching[f]);
        let mut set = crate::combin::union(&core, &difference(g, edge));
        set.truncate(s.r as usize - 1);
        out.insert(set);
    }
    out.into_iter().collect()
}

/// At most `ceil(|T|/2)` (r-1)-sets covering `T`: edges are paired in order
/// and each pair contributes the first (r-1)-subset of its intersection; a
/// leftover edge contributes its own first (r-1)-subset.
pub(crate) fn pairing_cover(edges: &[Vec<u32>], r: u32) -> Vec<Vec<u32>> {
    let rm1 = r as usize - 1;
    edges
        .chunks(2)
        .map(|pair| {
            let common = match pair {
                [f, g] => intersection(f, g),
                [f] => f.clone(),
                _ => unreachable!(),
            };
            let first = subsets(&common, rm1)
                .next()
                .expect("paired type-1 edges share r-1 vertices");
            first
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_every_other_edge_is_type_one() {
        for r in 3..=6 {
            let h = Hypergraph::simplex(r).unwrap();
            let m = vec![h.edges()[0].clone()];
            let s = classify(&h, &m).unwrap();
            assert_eq!(s.type1[0].len(), r as usize);
            assert_eq!(s.class[0], r as usize);
            assert!(matches!(s.friend[0], Friend::ExternalVertex(_)));
            assert!(s.plus[0]);
        }
    }

    #[test]
    fn single_edge_is_m0() {
        let h = Hypergraph::parse("5 3\n1 2 3\n").unwrap();
        let s = classify(&h, h.edges()).unwrap();
        assert!(s.type1[0].is_empty());
        assert_eq!(s.class[0], 0);
        assert_eq!(s.friend[0], Friend::None);
    }

    #[test]
    fn seven_edge_has_no_type_one_edges() {
        let h = Hypergraph::example("seven_edge").unwrap();
        let e = vec![1, 2, 3, 4];
        assert!(h.edges()[1..].iter().all(|f| intersection_size(f, &e) == 2));
        // 1234 alone is not a maximum 3-matching; classification rejects it
        assert!(matches!(
            classify(&h, &[e]),
            Err(Error::NotMaximum { given: 1, .. })
        ));
        let m = matching_number(&h, 3).unwrap().witness;
        let s = classify(&h, &m).unwrap();
        assert!(s.type1.iter().all(Vec::is_empty));
    }

    #[test]
    fn rejects_invalid_matchings() {
        let h = Hypergraph::complete(5, 3).unwrap();
        assert!(matches!(
            classify(&h, &[vec![1, 2, 3], vec![1, 2, 4]]),
            Err(Error::InvalidMatching(_))
        ));
        assert!(matches!(
            classify(&h, &[vec![1, 2, 6]]),
            Err(Error::InvalidMatching(_))
        ));
    }

    #[test]
    fn shared_set_case() {
        // e = 123, type-1 edges 124 and 125 share the pair 12
        let h = Hypergraph::parse("5 3\n1 2 3\n1 2 4\n1 2 5\n").unwrap();
        let s = classify(&h, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(s.friend[0], Friend::SharedSet(vec![1, 2]));
        assert_eq!(s.class[0], 1);
    }

    #[test]
    fn pairing_cover_uses_intersections() {
        let t1 = vec![vec![1, 2, 5], vec![1, 3, 5], vec![2, 3, 5]];
        assert_eq!(pairing_cover(&t1, 3), vec![vec![1, 5], vec![2, 3]]);
    }
}
