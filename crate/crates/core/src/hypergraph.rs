//! Uniform hypergraphs, graphs, derived hypergraphs and the text formats.

use std::collections::BTreeSet;
use std::fmt;

use crate::combin::{binomial, is_subset, lex_rank, subsets, subsets_of_range};
use crate::error::{Error, Result};

/// Largest number of derived vertices `C(n, m)` accepted by [`Hypergraph::derive`].
pub const MAX_DERIVED_VERTICES: u128 = 100_000;

/// An `r`-uniform hypergraph on the vertices `1..=n`.
///
/// Edges are strictly increasing vertex lists kept in lexicographic order, so
/// two hypergraphs are equal exactly when their edge lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: u32,
    r: u32,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    /// Builds the canonical form. Each edge is sorted; an edge with the wrong
    /// size, an out-of-range vertex, a repeated vertex or a duplicate of an
    /// earlier edge is rejected.
    pub fn new(n: u32, r: u32, edges: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "uniformity must be at least 1".into(),
            ));
        }
        let mut canonical = Vec::new();
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            check_edge(&e, n, r).map_err(|message| Error::Parse {
                line: i + 1,
                message,
            })?;
            canonical.push(e);
        }
        canonical.sort();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "duplicate edge {}",
                fmt_set(&w[0])
            )));
        }
        Ok(Hypergraph {
            n,
            r,
            edges: canonical,
        })
    }

    pub fn empty(n: u32, r: u32) -> Self {
        assert!(r >= 1);
        Hypergraph {
            n,
            r,
            edges: Vec::new(),
        }
    }

    /// Every `r`-subset of `1..=n`.
    pub fn complete(n: u32, r: u32) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidArgument(format!(
                "complete hypergraph needs 1 <= r <= n, got n={n} r={r}"
            )));
        }
        Ok(Hypergraph {
            n,
            r,
            edges: subsets_of_range(n, r as usize).collect(),
        })
    }

    /// `C([r+1], r)`: the `r + 1` facets of a simplex.
    pub fn simplex(r: u32) -> Result<Self> {
        Hypergraph::complete(r + 1, r)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: &[u32]) -> bool {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(edge))
            .is_ok()
    }

    pub fn index_of(&self, edge: &[u32]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    /// `C([n], r)` minus the edges of `self`.
    pub fn complement(&self) -> Self {
        let edges = subsets_of_range(self.n, self.r as usize)
            .filter(|e| !self.contains(e))
            .collect();
        Hypergraph {
            n: self.n,
            r: self.r,
            edges,
        }
    }

    /// Hypergraph with the same vertex set and a subset of the edges.
    pub fn with_edges<'a>(&self, edges: impl IntoIterator<Item = &'a Vec<u32>>) -> Self {
        let mut edges: Vec<Vec<u32>> = edges.into_iter().cloned().collect();
        edges.sort();
        edges.dedup();
        Hypergraph {
            n: self.n,
            r: self.r,
            edges,
        }
    }

    /// Edges of `self` not listed in `removed`.
    pub fn without(&self, removed: &[Vec<u32>]) -> Self {
        let removed: BTreeSet<&[u32]> = removed.iter().map(Vec::as_slice).collect();
        self.with_edges(
            self.edges
                .iter()
                .filter(|e| !removed.contains(e.as_slice())),
        )
    }

    /// The derived hypergraph `H^(m)`: its vertices are the `C(n, m)`
    /// m-subsets of `[n]`, identified with `1 + ` their lexicographic rank,
    /// and each edge `e` becomes the set of ranks of `C(e, m)`.
    pub fn derive(&self, m: u32) -> Result<Self> {
        if m == 0 || m > self.r {
            return Err(Error::InvalidArgument(format!(
                "derived order m={m} outside 1..={}",
                self.r
            )));
        }
        let vertices = binomial(u64::from(self.n), u64::from(m));
        if vertices > MAX_DERIVED_VERTICES {
            return Err(Error::capacity(
                "derived vertex count",
                vertices,
                MAX_DERIVED_VERTICES,
            ));
        }
        let edges: Vec<Vec<u32>> = self
            .edges
            .iter()
            .map(|e| {
                let mut d: Vec<u32> = subsets(e, m as usize)
                    .map(|s| lex_rank(&s, self.n) as u32 + 1)
                    .collect();
                d.sort_unstable();
                d
            })
            .collect();
        let derived = Hypergraph::new(
            vertices as u32,
            binomial(u64::from(self.r), u64::from(m)) as u32,
            edges,
        )?;
        assert_eq!(
            derived.len(),
            self.len(),
            "distinct edges must stay distinct"
        );
        Ok(derived)
    }

    /// `H[X]`: the edges inside `subset`, relabelled by rank within `subset`.
    /// Returns the hypergraph and the map from new ids (index + 1) to old ids.
    pub fn induced(&self, subset: &[u32]) -> (Self, Vec<u32>) {
        let mut keep: Vec<u32> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let edges = self
            .edges
            .iter()
            .filter(|e| is_subset(e, &keep))
            .map(|e| {
                e.iter()
                    .map(|v| keep.binary_search(v).unwrap() as u32 + 1)
                    .collect()
            })
            .collect();
        let h = Hypergraph {
            n: keep.len() as u32,
            r: self.r,
            edges,
        };
        (h, keep)
    }

    /// Parses the HG1 text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(u32, u32)> = None;
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<u32> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| err(format!("not a vertex id: `{t}`")))
                })
                .collect::<Result<_>>()?;
            match header {
                None => {
                    let [n, r] = fields[..] else {
                        return Err(err("malformed header, expected `n r`".into()));
                    };
                    if r == 0 || r > n {
                        return Err(err(format!("header needs 1 <= r <= n, got n={n} r={r}")));
                    }
                    header = Some((n, r));
                }
                Some((n, r)) => {
                    if fields.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(err("vertex ids must be strictly ascending".into()));
                    }
                    check_edge(&fields, n, r).map_err(err)?;
                    if !seen.insert(fields.clone()) {
                        return Err(err(format!("duplicate edge {}", fmt_set(&fields))));
                    }
                    edges.push(fields);
                }
            }
        }
        let Some((n, r)) = header else {
            return Err(Error::Parse {
                line: 1,
                message: "missing header".into(),
            });
        };
        edges.sort();
        Ok(Hypergraph { n, r, edges })
    }

    /// HG1 text in canonical order.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for e in &self.edges {
            out.push_str(&fmt_set(e));
            out.push('\n');
        }
        out
    }

    /// Built-in instances: `k6_quad`, `seven_edge`, `simplex(r)`, and for
    /// convenience `complete(n,r)` and `empty(n,r)`.
    pub fn example(name: &str) -> Result<Self> {
        let name = name.trim();
        match name {
            "k6_quad" => return Hypergraph::complete(6, 4),
            "seven_edge" => return Ok(seven_edge()),
            _ => {}
        }
        let unknown = || Error::UnknownExample(name.to_string());
        let (head, args) = name
            .strip_suffix(')')
            .and_then(|s| s.split_once('('))
            .ok_or_else(unknown)?;
        let args: Vec<u32> = args
            .split(',')
            .map(|a| a.trim().parse::<u32>().map_err(|_| unknown()))
            .collect::<Result<_>>()?;
        match (head, args.as_slice()) {
            ("simplex", &[r]) => Hypergraph::simplex(r),
            ("complete", &[n, r]) => Hypergraph::complete(n, r),
            ("empty", &[n, r]) if r >= 1 => Ok(Hypergraph::empty(n, r)),
            _ => Err(unknown()),
        }
    }
}

/// `{1234, 1256, 3456, 1367, 2467, 1457, 2357}`: 2-intersecting, with
/// fractional 2-cover number 7/2.
fn seven_edge() -> Hypergraph {
    let edges = [
        [1, 2, 3, 4],
        [1, 2, 5, 6],
        [3, 4, 5, 6],
        [1, 3, 6, 7],
        [2, 4, 6, 7],
        [1, 4, 5, 7],
        [2, 3, 5, 7],
    ];
    Hypergraph::new(7, 4, edges.iter().map(|e| e.to_vec())).expect("valid built-in")
}

fn check_edge(e: &[u32], n: u32, r: u32) -> Result<(), String> {
    if e.len() != r as usize {
        return Err(format!("edge has {} vertices, expected {r}", e.len()));
    }
    if let Some(v) = e.iter().find(|&&v| v == 0 || v > n) {
        return Err(format!("vertex {v} outside 1..={n}"));
    }
    if e.windows(2).any(|w| w[0] == w[1]) {
        return Err("repeated vertex in edge".into());
    }
    Ok(())
}

pub(crate) fn fmt_set(set: &[u32]) -> String {
    let mut s = String::new();
    for (i, v) in set.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&v.to_string());
    }
    s
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// A set of `m` distinct vertices, stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MSet(Vec<u32>);

impl MSet {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        MSet(vertices)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl std::ops::Deref for MSet {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for MSet {
    fn from(v: Vec<u32>) -> Self {
        MSet::new(v)
    }
}

impl fmt::Display for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_set(&self.0))
    }
}

/// A simple graph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    adjacency: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Graph {
            n,
            adjacency: vec![vec![false; n as usize + 1]; n as usize + 1],
        };
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidArgument(format!(
                    "edge {u} {v} outside 1..={n}"
                )));
            }
            if g.adjacent(u, v) {
                return Err(Error::InvalidArgument(format!("duplicate edge {u} {v}")));
            }
            g.adjacency[u as usize][v as usize] = true;
            g.adjacency[v as usize][u as usize] = true;
        }
        Ok(g)
    }

    pub fn complete(n: u32) -> Self {
        let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, pairs).expect("complete graph is simple")
    }

    pub fn cycle(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        Graph::new(n, (1..=n).map(|u| (u, u % n + 1)))
    }

    /// Disjoint union placing `other` on the vertices after `self`'s, then
    /// identifying the vertices listed in `glue` as `(ours, theirs)`.
    pub fn glue(&self, other: &Graph, glue: &[(u32, u32)]) -> Result<Self> {
        let mut map: Vec<u32> = Vec::with_capacity(other.n as usize + 1);
        map.push(0);
        let mut next = self.n;
        for v in 1..=other.n {
            match glue.iter().find(|&&(_, theirs)| theirs == v) {
                Some(&(ours, _)) => map.push(ours),
                None => {
                    next += 1;
                    map.push(next);
                }
            }
        }
        let mut pairs: BTreeSet<(u32, u32)> = self.edges().into_iter().collect();
        for (u, v) in other.edges() {
            let (a, b) = (map[u as usize], map[v as usize]);
            pairs.insert((a.min(b), a.max(b)));
        }
        Graph::new(next, pairs)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize][v as usize]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        (1..=self.n)
            .flat_map(|u| (u + 1..=self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
            .collect()
    }

    /// `H(G, r)`: the `r`-cliques of the graph as an `r`-uniform hypergraph.
    pub fn clique_hypergraph(&self, r: u32) -> Result<Hypergraph> {
        if r < 2 {
            return Err(Error::InvalidArgument(
                "clique size must be at least 2".into(),
            ));
        }
        let mut edges = Vec::new();
        let mut current = Vec::with_capacity(r as usize);
        self.extend_cliques(1, r as usize, &mut current, &mut edges);
        // generated in lexicographic order already
        Ok(Hypergraph {
            n: self.n,
            r,
            edges,
        })
    }

    fn extend_cliques(&self, from: u32, r: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for v in from..=self.n {
            if current.iter().all(|&u| self.adjacent(u, v)) {
                current.push(v);
                self.extend_cliques(v + 1, r, current, out);
                current.pop();
            }
        }
    }

    /// Parses GR1: first non-comment line `n`, then one `u v` pair per line with `u < v`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<u32> = None;
        let mut pairs = Vec::new();
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<u32> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| err(format!("not a vertex id: `{t}`")))
                })
                .collect::<Result<_>>()?;
            match n {
                None => {
                    let [count] = fields[..] else {
                        return Err(err("malformed header, expected `n`".into()));
                    };
                    n = Some(count);
                }
                Some(count) => {
                    let [u, v] = fields[..] else {
                        return Err(err("expected a pair `u v`".into()));
                    };
                    if u >= v {
                        return Err(err("pair must satisfy u < v".into()));
                    }
                    if u == 0 || v > count {
                        return Err(err(format!("vertex outside 1..={count}")));
                    }
                    if !seen.insert((u, v)) {
                        return Err(err(format!("duplicate edge {u} {v}")));
                    }
                    pairs.push((u, v));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        Graph::new(n, pairs)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
