//! Exact m-matching and m-cover numbers and their fractional versions.
//!
//! `ν^(m)(H)` and `τ^(m)(H)` are the matching and cover numbers of the
//! derived hypergraph `H^(m)`. The searches below work on `H` directly: two
//! edges conflict when they share at least `m` vertices, and the candidate
//! cover sets are the m-subsets of edges.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use num_traits::{One, Signed, Zero};

use crate::combin::{binomial, intersection_size, is_subset, subsets};
use crate::error::{Error, Result};
use crate::hypergraph::{fmt_set, Hypergraph, MSet};
use crate::lp::PackingLp;
use crate::rational::{fmt_pq, Rational};
use crate::solve::{lex_first_maximum_independent_set, HittingSet};

/// Largest edge count accepted by the integral searches.
pub const MAX_SEARCH_EDGES: usize = 5000;
/// Largest `variables + constraints` accepted by the LP.
pub const MAX_LP_SIZE: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingNumber {
    pub value: usize,
    /// the lexicographically first maximum m-matching
    pub witness: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverNumber {
    pub value: usize,
    pub witness: Vec<MSet>,
}

/// Nonnegative weights on the edges of a hypergraph, indexed like `edges()`.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalMatching {
    pub m: u32,
    pub weights: Vec<Rational>,
}

impl FractionalMatching {
    pub fn size(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Every m-set lies in edges of total weight at most 1.
    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        if self.weights.len() != h.len() || self.weights.iter().any(Signed::is_negative) {
            return false;
        }
        load_per_mset(h, self.m, &self.weights)
            .values()
            .all(|w| *w <= Rational::one())
    }
}

/// Nonnegative weights on m-sets; absent sets weigh zero.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FractionalCover {
    pub m: u32,
    pub weights: BTreeMap<MSet, Rational>,
}

impl FractionalCover {
    pub fn new(m: u32) -> Self {
        FractionalCover {
            m,
            weights: BTreeMap::new(),
        }
    }

    /// Adds `w` to the weight of `set`.
    pub fn add(&mut self, set: impl Into<MSet>, w: &Rational) {
        if w.is_zero() {
            return;
        }
        let set = set.into();
        debug_assert_eq!(set.m(), self.m as usize);
        *self.weights.entry(set).or_insert_with(Rational::zero) += w;
    }

    pub fn size(&self) -> Rational {
        self.weights.values().sum()
    }

    pub fn get(&self, set: &[u32]) -> Rational {
        self.weights
            .get(&MSet::new(set.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `Σ_{x ⊆ edge, |x| = m} t(x)`.
    pub fn coverage(&self, edge: &[u32]) -> Rational {
        if binomial(edge.len() as u64, u64::from(self.m)) as usize <= self.weights.len() {
            subsets(edge, self.m as usize)
                .filter_map(|s| self.weights.get(&MSet::new(s)).cloned())
                .sum()
        } else {
            self.weights
                .iter()
                .filter(|(s, _)| is_subset(s, edge))
                .map(|(_, w)| w.clone())
                .sum()
        }
    }

    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        self.weights.values().all(|w| !w.is_negative())
            && h.edges()
                .iter()
                .all(|e| self.coverage(e) >= Rational::one())
    }

    pub fn support(&self) -> usize {
        self.weights.values().filter(|w| w.is_positive()).count()
    }
}

/// A cover as handed to [`verify_cover`].
#[derive(Clone, Debug, PartialEq)]
pub enum Cover {
    Integral(Vec<MSet>),
    Fractional(FractionalCover),
}

impl Cover {
    /// Reads a cover of m-sets: `w <p>/<q> : v1 .. vm` lines give weights,
    /// bare vertex lines weigh 1. Blank lines, `#` comments and the `size=`
    /// trailer of a certificate dump are skipped.
    pub fn parse(text: &str, m: u32) -> Result<Cover> {
        let mut weights = FractionalCover::new(m);
        let mut integral = Vec::new();
        let mut fractional = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("size=") {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: idx + 1,
                message,
            };
            let (w, verts) = match line.strip_prefix("w ") {
                Some(rest) => {
                    let (w, verts) = rest
                        .split_once(':')
                        .ok_or_else(|| err("expected `w <p>/<q> : vertices`".into()))?;
                    let w = crate::rational::parse_pq(w.trim()).map_err(|e| err(e.to_string()))?;
                    fractional = true;
                    (w, verts)
                }
                None => (Rational::one(), line),
            };
            let set: Vec<u32> = verts
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| err(format!("not a vertex id: `{t}`")))
                })
                .collect::<Result<_>>()?;
            let set = MSet::new(set);
            if set.m() != m as usize {
                return Err(err(format!(
                    "expected {m} distinct vertices, got {}",
                    set.m()
                )));
            }
            if w.is_negative() {
                return Err(err("negative weight".into()));
            }
            integral.push(set.clone());
            weights.add(set, &w);
        }
        Ok(if fractional {
            Cover::Fractional(weights)
        } else {
            Cover::Integral(integral)
        })
    }

    pub fn as_fractional(&self, m: u32) -> FractionalCover {
        match self {
            Cover::Fractional(c) => c.clone(),
            Cover::Integral(sets) => {
                let mut c = FractionalCover::new(m);
                for s in sets {
                    c.weights.insert(s.clone(), Rational::one());
                }
                c
            }
        }
    }
}

/// Outcome of checking a cover against a hypergraph and an optional size bound.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverCertificate {
    pub m: u32,
    pub cover: Cover,
    pub size: Rational,
    pub bound: Option<Rational>,
    /// every edge received weight at least 1
    pub covers_all: bool,
    /// `covers_all` and `size <= bound`
    pub verified: bool,
    pub transcript: Vec<String>,
}

impl CoverCertificate {
    /// Text transcript: one `w <p>/<q> : v1 v2 …` line per weighted m-set,
    /// then `size=<p>/<q> bound=<p>/<q> valid=<0|1>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (set, w) in &self.cover.as_fractional(self.m).weights {
            let _ = writeln!(out, "w {} : {}", fmt_pq(w), set);
        }
        let bound = self
            .bound
            .as_ref()
            .map_or_else(|| "none".to_string(), fmt_pq);
        let _ = writeln!(
            out,
            "size={} bound={} valid={}",
            fmt_pq(&self.size),
            bound,
            u8::from(self.verified)
        );
        out
    }
}

fn check_order(h: &Hypergraph, m: u32) -> Result<()> {
    if m == 0 || m > h.r() {
        return Err(Error::InvalidArgument(format!(
            "m={m} outside 1..={}",
            h.r()
        )));
    }
    Ok(())
}

fn check_search_capacity(h: &Hypergraph) -> Result<()> {
    if h.len() > MAX_SEARCH_EDGES {
        return Err(Error::capacity(
            "edge count",
            h.len() as u128,
            MAX_SEARCH_EDGES as u128,
        ));
    }
    Ok(())
}

/// Conflict graph on the edges: `e ~ f` iff `|e ∩ f| >= m`.
pub(crate) fn conflict_graph(edges: &[Vec<u32>], m: u32) -> Vec<FixedBitSet> {
    let mut adj = vec![FixedBitSet::with_capacity(edges.len()); edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if intersection_size(&edges[i], &edges[j]) >= m as usize {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

/// `ν^(m)(H)` with the lexicographically first maximum m-matching.
pub fn matching_number(h: &Hypergraph, m: u32) -> Result<MatchingNumber> {
    check_order(h, m)?;
    check_search_capacity(h)?;
    let adj = conflict_graph(h.edges(), m);
    let chosen = lex_first_maximum_independent_set(&adj);
    Ok(MatchingNumber {
        value: chosen.len(),
        witness: chosen.into_iter().map(|i| h.edges()[i].clone()).collect(),
    })
}

/// Distinct m-subsets of the edges, in lexicographic order, each with the
/// indices of the edges containing it.
fn msets_of_edges(h: &Hypergraph, m: u32) -> BTreeMap<MSet, Vec<usize>> {
    let mut map: BTreeMap<MSet, Vec<usize>> = BTreeMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        for s in subsets(e, m as usize) {
            map.entry(MSet::new(s)).or_default().push(i);
        }
    }
    map
}

/// `τ^(m)(H)` with a minimum m-cover.
pub fn cover_number(h: &Hypergraph, m: u32) -> Result<CoverNumber> {
    check_order(h, m)?;
    check_search_capacity(h)?;
    let msets: Vec<MSet> = msets_of_edges(h, m).into_keys().collect();
    let constraints: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            subsets(e, m as usize)
                .map(|s| msets.binary_search(&MSet::new(s)).expect("collected above"))
                .collect()
        })
        .collect();
    let chosen = HittingSet::new(msets.len(), constraints)
        .solve(0)
        .expect("every edge has an m-subset");
    Ok(CoverNumber {
        value: chosen.len(),
        witness: chosen.into_iter().map(|i| msets[i].clone()).collect(),
    })
}

/// Complementary slackness data for an optimal primal/dual pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Slackness {
    /// `|U|`, the m-sets of positive dual weight
    pub dual_support: usize,
    /// `Σ_{u ∈ U} Σ_{e ⊇ u} s(e)`; equals `|U|` under complementary slackness
    pub incidence_sum: Rational,
    /// `C(r, m) · ν*^(m)`
    pub binomial_value: Rational,
    /// every m-subset of every edge with positive primal weight lies in `U`,
    /// in which case `|U| = C(r, m) · ν*^(m)`
    pub dual_covers_support: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FractionalNumbers {
    /// `ν*^(m) = τ*^(m)`
    pub value: Rational,
    pub primal: FractionalMatching,
    pub dual: FractionalCover,
    pub slackness: Slackness,
    pub pivots: usize,
}

/// `ν*^(m)(H) = τ*^(m)(H)` by exact simplex on the matching LP of `H^(m)`.
///
/// A constraint whose set of edges is contained in another constraint's is
/// implied by it and dropped before solving; dropped m-sets get dual weight
/// zero. The returned pair is re-checked against the full system: both are
/// feasible, their sizes agree and complementary slackness holds.
pub fn fractional_numbers(h: &Hypergraph, m: u32) -> Result<FractionalNumbers> {
    check_order(h, m)?;
    let incidence = msets_of_edges(h, m);
    let size = h.len() + incidence.len();
    if size > MAX_LP_SIZE {
        return Err(Error::capacity(
            "LP size",
            size as u128,
            MAX_LP_SIZE as u128,
        ));
    }

    // one representative (the lexicographically first m-set) per distinct row
    let mut rows: BTreeMap<Vec<usize>, MSet> = BTreeMap::new();
    for (set, edges) in &incidence {
        rows.entry(edges.clone()).or_insert_with(|| set.clone());
    }
    let rows: Vec<(Vec<usize>, MSet)> = rows.into_iter().collect();
    let masks: Vec<FixedBitSet> = rows
        .iter()
        .map(|(edges, _)| {
            let mut b = FixedBitSet::with_capacity(h.len());
            edges.iter().for_each(|&e| b.insert(e));
            b
        })
        .collect();
    let kept: Vec<usize> = (0..rows.len())
        .filter(|&i| {
            !(0..rows.len()).any(|j| {
                j != i && rows[j].0.len() > rows[i].0.len() && masks[i].is_subset(&masks[j])
            })
        })
        .collect();

    let lp = PackingLp {
        objective: vec![Rational::one(); h.len()],
        rows: kept
            .iter()
            .map(|&i| {
                let mut row = vec![Rational::zero(); h.len()];
                for &e in &rows[i].0 {
                    row[e] = Rational::one();
                }
                row
            })
            .collect(),
        rhs: vec![Rational::one(); kept.len()],
    };
    let solution = lp.solve()?;

    let primal = FractionalMatching {
        m,
        weights: solution.primal,
    };
    let mut dual = FractionalCover::new(m);
    for (k, &i) in kept.iter().enumerate() {
        dual.add(rows[i].1.clone(), &solution.dual[k]);
    }

    let violation = |what: &str| Error::TheoremViolation(format!("LP certificate: {what}"));
    if !primal.is_valid(h) {
        return Err(violation("primal infeasible"));
    }
    if !dual.is_valid(h) {
        return Err(violation("dual infeasible"));
    }
    if primal.size() != solution.value || dual.size() != solution.value {
        return Err(violation("primal and dual sizes differ"));
    }
    let slackness = complementary_slackness(h, m, &primal, &dual)
        .ok_or_else(|| violation("complementary slackness fails"))?;

    Ok(FractionalNumbers {
        value: solution.value,
        primal,
        dual,
        slackness,
        pivots: solution.pivots,
    })
}

fn load_per_mset(h: &Hypergraph, m: u32, weights: &[Rational]) -> BTreeMap<MSet, Rational> {
    let mut load: BTreeMap<MSet, Rational> = BTreeMap::new();
    for (e, w) in h.edges().iter().zip(weights) {
        for s in subsets(e, m as usize) {
            *load.entry(MSet::new(s)).or_insert_with(Rational::zero) += w;
        }
    }
    load
}

/// Checks both slackness conditions; `None` if either fails.
pub fn complementary_slackness(
    h: &Hypergraph,
    m: u32,
    primal: &FractionalMatching,
    dual: &FractionalCover,
) -> Option<Slackness> {
    let load = load_per_mset(h, m, &primal.weights);
    let mut incidence_sum = Rational::zero();
    let mut dual_support = 0;
    for (set, t) in &dual.weights {
        if t.is_positive() {
            let l = load.get(set).cloned().unwrap_or_else(Rational::zero);
            if !l.is_one() {
                return None;
            }
            incidence_sum += l;
            dual_support += 1;
        }
    }
    let mut dual_covers_support = true;
    for (e, s) in h.edges().iter().zip(&primal.weights) {
        if s.is_positive() {
            if !dual.coverage(e).is_one() {
                return None;
            }
            if subsets(e, m as usize).any(|x| !dual.get(&x).is_positive()) {
                dual_covers_support = false;
            }
        }
    }
    let binomial_value =
        Rational::from_integer(binomial(h.r().into(), m.into()).into()) * primal.size();
    Some(Slackness {
        dual_support,
        incidence_sum,
        binomial_value,
        dual_covers_support,
    })
}

/// Checks the covering inequality on every edge and, if given, the size bound.
pub fn verify_cover(
    h: &Hypergraph,
    m: u32,
    cover: &Cover,
    bound: Option<&Rational>,
) -> CoverCertificate {
    let weights = cover.as_fractional(m);
    let mut transcript = Vec::new();
    let bad_sets: Vec<&MSet> = weights
        .weights
        .iter()
        .filter(|(s, w)| {
            s.m() != m as usize || w.is_negative() || s.iter().any(|&v| v == 0 || v > h.n())
        })
        .map(|(s, _)| s)
        .collect();
    for s in &bad_sets {
        transcript.push(format!(
            "malformed entry {s}: not a weighted {m}-set of 1..={}",
            h.n()
        ));
    }
    let mut uncovered = 0;
    for e in h.edges() {
        let c = weights.coverage(e);
        if c < Rational::one() {
            uncovered += 1;
            transcript.push(format!(
                "edge {} covered with {} < 1",
                fmt_set(e),
                fmt_pq(&c)
            ));
        }
    }
    let covers_all = bad_sets.is_empty() && uncovered == 0;
    if uncovered == 0 {
        transcript.push(format!("all {} edges covered", h.len()));
    }
    let size = weights.size();
    let within = match bound {
        Some(b) => {
            let ok = size <= *b;
            transcript.push(format!(
                "size {} {} bound {}",
                fmt_pq(&size),
                if ok { "<=" } else { ">" },
                fmt_pq(b)
            ));
            ok
        }
        None => true,
    };
    CoverCertificate {
        m,
        cover: cover.clone(),
        size,
        bound: bound.cloned(),
        covers_all,
        verified: covers_all && within,
        transcript,
    }
}

/// Per-instance values of `ν, τ, ν* = τ*` and the three ratios.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub nu: usize,
    pub tau: usize,
    pub nustar: Rational,
    /// `None` when `ν = 0`
    pub tau_over_nu: Option<Rational>,
    pub taustar_over_nu: Option<Rational>,
    pub tau_over_nustar: Option<Rational>,
}

pub fn ratio_report(h: &Hypergraph, m: u32) -> Result<RatioReport> {
    let nu = matching_number(h, m)?.value;
    let tau = cover_number(h, m)?.value;
    let nustar = fractional_numbers(h, m)?.value;
    let int = |v: usize| Rational::from_integer(v.into());
    let (tau_over_nu, taustar_over_nu, tau_over_nustar) = if nu == 0 {
        (None, None, None)
    } else {
        (
            Some(int(tau) / int(nu)),
            Some(&nustar / int(nu)),
            Some(int(tau) / &nustar),
        )
    };
    Ok(RatioReport {
        nu,
        tau,
        nustar,
        tau_over_nu,
        taustar_over_nu,
        tau_over_nustar,
    })
}

/// All exact parameters of one instance, as printed by the `params` command.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamsRecord {
    pub matching: MatchingNumber,
    pub cover: CoverNumber,
    pub fractional: FractionalNumbers,
}

impl ParamsRecord {
    pub fn compute(h: &Hypergraph, m: u32) -> Result<Self> {
        Ok(ParamsRecord {
            matching: matching_number(h, m)?,
            cover: cover_number(h, m)?,
            fractional: fractional_numbers(h, m)?,
        })
    }

    /// `nu=<int> tau=<int> nustar=<p>/<q>` followed by witness blocks.
    pub fn dump(&self, h: &Hypergraph) -> String {
        let mut out = format!(
            "nu={} tau={} nustar={}\n",
            self.matching.value,
            self.cover.value,
            fmt_pq(&self.fractional.value)
        );
        out.push_str("matching:\n");
        for e in &self.matching.witness {
            let _ = writeln!(out, "{}", fmt_set(e));
        }
        out.push_str("cover:\n");
        for s in &self.cover.witness {
            let _ = writeln!(out, "{s}");
        }
        out.push_str("fractional_matching:\n");
        for (e, w) in h.edges().iter().zip(&self.fractional.primal.weights) {
            if w.is_positive() {
                let _ = writeln!(out, "w {} : {}", fmt_pq(w), fmt_set(e));
            }
        }
        out.push_str("fractional_cover:\n");
        for (s, w) in &self.fractional.dual.weights {
            let _ = writeln!(out, "w {} : {}", fmt_pq(w), s);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ex(name: &str) -> Hypergraph {
        Hypergraph::example(name).unwrap()
    }

    #[test]
    fn matching_numbers_of_examples() {
        for r in 2..=6 {
            assert_eq!(
                matching_number(&Hypergraph::simplex(r).unwrap(), r - 1)
                    .unwrap()
                    .value,
                1
            );
        }
        assert_eq!(matching_number(&ex("seven_edge"), 2).unwrap().value, 1);
        let empty = Hypergraph::empty(5, 3);
        assert_eq!(matching_number(&empty, 2).unwrap().value, 0);
        assert_eq!(cover_number(&empty, 2).unwrap().value, 0);
        assert_eq!(fractional_numbers(&empty, 2).unwrap().value, int(0));
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let h = Hypergraph::complete(6, 3).unwrap();
        let got = matching_number(&h, 1).unwrap();
        assert_eq!(got.witness, vec![vec![1, 2, 3], vec![4, 5, 6]]);
    }

    #[test]
    fn cover_numbers_of_examples() {
        assert_eq!(cover_number(&ex("k6_quad"), 2).unwrap().value, 3);
        let single = Hypergraph::parse("5 4\n1 2 4 5\n").unwrap();
        for m in 1..=4 {
            assert_eq!(cover_number(&single, m).unwrap().value, 1);
        }
        assert_eq!(cover_number(&ex("seven_edge"), 2).unwrap().value, 4);
        assert_eq!(cover_number(&ex("simplex(3)"), 2).unwrap().value, 2);
    }

    #[test]
    fn fractional_numbers_of_examples() {
        for r in 2..=6 {
            let f = fractional_numbers(&Hypergraph::simplex(r).unwrap(), r - 1).unwrap();
            assert_eq!(f.value, ratio(i64::from(r) + 1, 2));
        }
        assert_eq!(
            fractional_numbers(&ex("seven_edge"), 2).unwrap().value,
            ratio(7, 2)
        );
        assert_eq!(
            fractional_numbers(&ex("k6_quad"), 2).unwrap().value,
            ratio(5, 2)
        );
    }

    #[test]
    fn order_is_checked() {
        assert!(matching_number(&ex("k6_quad"), 0).is_err());
        assert!(cover_number(&ex("k6_quad"), 5).is_err());
        assert!(fractional_numbers(&ex("k6_quad"), 5).is_err());
    }

    #[test]
    fn verify_cover_cases() {
        // all (r-1)-subsets... of a maximum matching's edges with weight 1
        let h = ex("seven_edge");
        let nu = matching_number(&h, 2).unwrap();
        let sets: Vec<MSet> = nu
            .witness
            .iter()
            .flat_map(|e| subsets(e, 2).map(MSet::new))
            .collect();
        let cert = verify_cover(&h, 2, &Cover::Integral(sets), None);
        assert!(cert.verified);
        assert_eq!(cert.size, int(6 * nu.value as i64));

        let r = 4;
        let simplex = Hypergraph::simplex(r).unwrap();
        let mut t = FractionalCover::new(r - 1);
        for s in subsets(&[1, 2, 3, 4, 5], 3) {
            t.add(s, &ratio(1, 4));
        }
        let cert = verify_cover(&simplex, 3, &Cover::Fractional(t), Some(&ratio(5, 2)));
        assert!(cert.verified);
        assert_eq!(cert.size, ratio(5, 2));

        let cert = verify_cover(
            &simplex,
            3,
            &Cover::Fractional(FractionalCover::new(3)),
            None,
        );
        assert!(!cert.verified);
        assert!(cert
            .transcript
            .iter()
            .any(|l| l.contains("covered with 0/1")));
    }

    #[test]
    fn certificate_dump_format() {
        let h = Hypergraph::parse("3 2\n1 2\n").unwrap();
        let cert = verify_cover(
            &h,
            1,
            &Cover::Integral(vec![MSet::new(vec![2])]),
            Some(&int(1)),
        );
        assert_eq!(cert.dump(), "w 1/1 : 2\nsize=1/1 bound=1/1 valid=1\n");
    }

    #[test]
    fn ratio_reports() {
        let r = ratio_report(&ex("k6_quad"), 2).unwrap();
        assert_eq!(r.taustar_over_nu, Some(ratio(5, 2)));
        let r = ratio_report(&ex("seven_edge"), 2).unwrap();
        assert_eq!(r.taustar_over_nu, Some(ratio(7, 2)));
        let r = ratio_report(&ex("simplex(3)"), 2).unwrap();
        assert_eq!(r.tau_over_nu, Some(int(2)));
        let r = ratio_report(&Hypergraph::empty(4, 3), 2).unwrap();
        assert_eq!(r.tau_over_nu, None);
    }

    #[test]
    fn params_record_text() {
        let h = ex("seven_edge");
        let rec = ParamsRecord::compute(&h, 2).unwrap();
        let text = rec.dump(&h);
        assert!(text.starts_with("nu=1 tau=4 nustar=7/2\nmatching:\n1 2 3 4\ncover:\n"));
    }

    #[test]
    fn cover_dump_round_trip() {
        let h = ex("simplex(3)");
        let cert = crate::tuza::cover_r3(&h).unwrap();
        let back = Cover::parse(&cert.dump(), 2).unwrap();
        let again = verify_cover(&h, 2, &back, cert.bound.as_ref());
        assert!(again.verified);
        assert_eq!(again.size, cert.size);
    }

    #[test]
    fn cover_parse_forms() {
        let c = Cover::parse("# two pairs\n1 2\n3 4\n", 2).unwrap();
        assert_eq!(
            c,
            Cover::Integral(vec![MSet::new(vec![1, 2]), MSet::new(vec![3, 4])])
        );
        assert!(Cover::parse("1 2 3\n", 2).is_err());
        assert!(Cover::parse("w 1/0 : 1 2\n", 2).is_err());
        assert!(Cover::parse("w -1/2 : 1 2\n", 2).is_err());
    }
}
