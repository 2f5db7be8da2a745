use std::collections::{BTreeMap, BTreeSet};

use crate::combin::{intersection, intersection_size, is_subset, subsets, union};
use crate::error::{Error, Result};
use crate::hypergraph::{fmt_set, Graph, Hypergraph};
use crate::params::{matching_number, verify_cover, Cover, CoverCertificate, FractionalCover};
use crate::rational::{fmt_pq, int, ratio};

/// Disjoint indispensable pairs `p1`, `p2` and `q = f1 ∩ f2` for witnesses.
pub type DisjointPairs = (Vec<u32>, Vec<u32>, Vec<u32>);

/// A maximum 2-matching of a 4-graph together with its type-1 edges.
#[derive(Clone, Debug)]
pub struct CliqueMatchingStructure {
    pub matching: Vec<Vec<u32>>,
    /// type-1 edges meeting each `M`-edge in at least two vertices,
    /// excluding the `M`-edge itself
    pub type1: Vec<Vec<Vec<u32>>>,
    /// indispensable pairs of each `M`-edge with their witnesses
    pub witnesses: Vec<BTreeMap<Vec<u32>, Vec<Vec<u32>>>>,
    pub disjoint: Vec<Vec<DisjointPairs>>,
}

impl CliqueMatchingStructure {
    pub fn len(&self) -> usize {
        self.matching.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matching.is_empty()
    }

    pub fn indispensable(&self, e: usize) -> Vec<Vec<u32>> {
        self.witnesses[e].keys().cloned().collect()
    }
}

/// Classifies a maximum 2-matching of a 4-graph, asserting that type-1
/// edges of one `M`-edge pairwise share two vertices and that witnesses of
/// disjoint indispensable pairs meet in a pair outside the `M`-edge.
pub fn classify_clique42(h: &Hypergraph, matching: &[Vec<u32>]) -> Result<CliqueMatchingStructure> {
    if h.r() != 4 {
        return Err(Error::InvalidArgument(format!(
            "(4,2) classification needs r = 4, got {}",
            h.r()
        )));
    }
    for (i, e) in matching.iter().enumerate() {
        if !h.contains(e) {
            return Err(Error::InvalidMatching(format!(
                "{} is not an edge",
                fmt_set(e)
            )));
        }
        if let Some(f) = matching[i + 1..]
            .iter()
            .find(|f| intersection_size(e, f) >= 2)
        {
            return Err(Error::InvalidMatching(format!(
                "{} and {} share at least 2 vertices",
                fmt_set(e),
                fmt_set(f)
            )));
        }
    }
    let maximum = matching_number(h, 2)?.value;
    if maximum != matching.len() {
        return Err(Error::NotMaximum {
            given: matching.len(),
            maximum,
        });
    }
    classify_trusted(h, matching)
}

fn classify_trusted(h: &Hypergraph, matching: &[Vec<u32>]) -> Result<CliqueMatchingStructure> {
    let k = matching.len();
    let in_m: BTreeSet<&[u32]> = matching.iter().map(Vec::as_slice).collect();
    let mut type1 = vec![Vec::new(); k];
    let mut witnesses = vec![BTreeMap::new(); k];
    for f in h.edges() {
        if in_m.contains(f.as_slice()) {
            continue;
        }
        let hits: Vec<usize> = (0..k)
            .filter(|&e| intersection_size(f, &matching[e]) >= 2)
            .collect();
        match hits.as_slice() {
            [] => {
                return Err(Error::TheoremViolation(format!(
                    "edge {} extends the 2-matching, so it is not maximum",
                    fmt_set(f)
                )))
            }
            &[e] => {
                let p = intersection(f, &matching[e]);
                if p.len() == 2 {
                    witnesses[e]
                        .entry(p)
                        .or_insert_with(Vec::new)
                        .push(f.clone());
                }
                type1[e].push(f.clone());
            }
            _ => {}
        }
    }

    let mut disjoint = vec![Vec::new(); k];
    for e in 0..k {
        for (i, f) in type1[e].iter().enumerate() {
            if let Some(g) = type1[e][i + 1..]
                .iter()
                .find(|g| intersection_size(f, g) < 2)
            {
                return Err(Error::TheoremViolation(format!(
                    "type-1 edges {} and {} at {} share fewer than two vertices",
                    fmt_set(f),
                    fmt_set(g),
                    fmt_set(&matching[e])
                )));
            }
        }
        let pairs: Vec<&Vec<u32>> = witnesses[e].keys().collect();
        for (i, p1) in pairs.iter().enumerate() {
            for p2 in &pairs[i + 1..] {
                if intersection_size(p1, p2) > 0 {
                    continue;
                }
                let f1 = &witnesses[e][*p1][0];
                let f2 = &witnesses[e][*p2][0];
                let q = intersection(f1, f2);
                if q.len() != 2 || intersection_size(&q, &matching[e]) != 0 {
                    return Err(Error::TheoremViolation(format!(
                        "witnesses {} and {} of disjoint pairs meet in {}",
                        fmt_set(f1),
                        fmt_set(f2),
                        fmt_set(&q)
                    )));
                }
                disjoint[e].push(((*p1).clone(), (*p2).clone(), q));
            }
        }
    }
    Ok(CliqueMatchingStructure {
        matching: matching.to_vec(),
        type1,
        witnesses,
        disjoint,
    })
}

/// Pairs `(p, q)` drawn from pairs inside `edges` such that every edge
/// contains `p` or `q`: a single pair `(p, p)` if one exists, otherwise the
/// first `p < q` in lexicographic order.
pub fn two_pairs(edges: &[Vec<u32>]) -> Option<(Vec<u32>, Vec<u32>)> {
    let candidates: BTreeSet<Vec<u32>> = edges.iter().flat_map(|f| subsets(f, 2)).collect();
    let candidates: Vec<Vec<u32>> = candidates.into_iter().collect();
    if let Some(p) = candidates
        .iter()
        .find(|p| edges.iter().all(|f| is_subset(p, f)))
    {
        return Some((p.clone(), p.clone()));
    }
    for (i, p) in candidates.iter().enumerate() {
        let rest: Vec<&Vec<u32>> = edges.iter().filter(|f| !is_subset(p, f)).collect();
        if let Some(q) = candidates[i + 1..]
            .iter()
            .find(|q| rest.iter().all(|f| is_subset(q, f)))
        {
            return Some((p.clone(), q.clone()));
        }
    }
    None
}

/// Fractional 2-cover of the 4-clique hypergraph of `g` of size at most
/// `4 ν^(2)`: `1/2` on all pairs of a maximum 2-matching plus `1/2` on two
/// pairs covering the witnesses of each matching edge.
pub fn cover_42_clique(g: &Graph) -> Result<CoverCertificate> {
    let h = g.clique_hypergraph(4)?;
    let matching = matching_number(&h, 2)?.witness;
    let s = classify_trusted(&h, &matching)?;
    let half = ratio(1, 2);
    let mut cover = FractionalCover::new(2);
    let mut transcript = vec![format!("maximum 2-matching size {}", s.len())];
    for e in 0..s.len() {
        let edge = &s.matching[e];
        for (_, _, q) in &s.disjoint[e] {
            let block = union(edge, q);
            let (sub, _) = h.induced(&block);
            if sub.len() != 15 {
                return Err(Error::TheoremViolation(format!(
                    "{} spans {} edges instead of 15",
                    fmt_set(&block),
                    sub.len()
                )));
            }
        }
        for p in subsets(edge, 2) {
            cover.add(p, &half);
        }
        let mut size = int(3);
        // edges meeting `e` in three or more vertices already carry weight 3/2
        let exposed: Vec<Vec<u32>> = s.witnesses[e].values().flatten().cloned().collect();
        if !exposed.is_empty() {
            let (p, q) = two_pairs(&exposed).ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "no two pairs cover the type-1 edges at {}",
                    fmt_set(edge)
                ))
            })?;
            cover.add(p.clone(), &half);
            size += &half;
            if q != p {
                cover.add(q, &half);
                size += &half;
            }
        }
        transcript.push(format!(
            "e={} t_e={} budget=4",
            fmt_set(edge),
            fmt_pq(&size)
        ));
    }
    let bound = int(4 * s.len() as i64);
    let mut cert = verify_cover(&h, 2, &Cover::Fractional(cover), Some(&bound));
    if !cert.verified {
        return Err(Error::TheoremViolation(format!(
            "clique cover failed verification: {}",
            cert.transcript.join("; ")
        )));
    }
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_cover() {
        let c = cover_42_clique(&Graph::complete(6)).unwrap();
        assert!(c.verified);
        // the witnesses all contain 56, so one extra pair suffices
        assert_eq!(c.size, ratio(7, 2));
    }

    #[test]
    fn triangle_free_graph_gives_empty_cover() {
        let c = cover_42_clique(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c.size, int(0));
        assert!(c.verified);
    }

    #[test]
    fn glued_k6() {
        let g = Graph::complete(6)
            .glue(&Graph::complete(6), &[(1, 1)])
            .unwrap();
        let h = g.clique_hypergraph(4).unwrap();
        let nu = matching_number(&h, 2).unwrap().value;
        let c = cover_42_clique(&g).unwrap();
        assert!(c.verified);
        assert!(c.size <= int(4 * nu as i64));
    }

    #[test]
    fn disjoint_pairs_span_k6() {
        let h = Hypergraph::example("k6_quad").unwrap();
        let m = matching_number(&h, 2).unwrap().witness;
        let s = classify_clique42(&h, &m).unwrap();
        assert_eq!(s.len(), 1);
        assert!(!s.disjoint[0].is_empty());
        for (p1, p2, q) in &s.disjoint[0] {
            assert_eq!(intersection_size(p1, p2), 0);
            assert_eq!(intersection_size(q, &s.matching[0]), 0);
        }
    }

    #[test]
    fn two_pairs_search() {
        let edges = vec![vec![1, 2, 5, 6], vec![1, 3, 5, 6], vec![1, 4, 5, 6]];
        assert_eq!(two_pairs(&edges), Some((vec![1, 5], vec![1, 5])));
        let edges = vec![vec![1, 2, 5, 6], vec![1, 3, 5, 7], vec![2, 3, 5, 6]];
        assert_eq!(two_pairs(&edges), Some((vec![1, 2], vec![3, 5])));
        let edges = vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]];
        assert_eq!(two_pairs(&edges), Some((vec![1, 2], vec![5, 6])));
        assert_eq!(
            two_pairs(&[vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9, 10, 11, 12]]),
            None
        );
    }

    #[test]
    fn rejects_non_maximum() {
        let h = Hypergraph::example("k6_quad").unwrap();
        assert!(matches!(
            classify_clique42(&h, &[]),
            Err(Error::NotMaximum { .. })
        ));
    }
}
