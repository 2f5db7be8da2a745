use std::str::FromStr;

use crate::combin::{binomial, intersection, is_subset, subsets, union};
use crate::error::{Error, Result};
use crate::hypergraph::{fmt_set, Hypergraph};
use crate::params::{matching_number, verify_cover, Cover, CoverCertificate, FractionalCover};
use crate::rational::{fmt_pq, int, ratio, Rational};

use super::structure::{
    bad_edge_hitting_sets, classify_trusted, pairing_cover, Friend, MatchingStructure,
};

/// Cover constructions selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Weak,
    R3,
    R4,
    General,
    Clique42,
}

impl FromStr for CoverMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(CoverMode::Weak),
            "r3" => Ok(CoverMode::R3),
            "r4" => Ok(CoverMode::R4),
            "general" => Ok(CoverMode::General),
            "clique42" => Ok(CoverMode::Clique42),
            _ => Err(Error::InvalidArgument(format!("unknown cover mode `{s}`"))),
        }
    }
}

/// Per-edge budget factor of each construction, as a multiple of `|M|`.
pub fn bound_factor(mode: CoverMode, r: u32) -> Rational {
    match mode {
        CoverMode::Weak => ratio(3 * i64::from(r), 4),
        CoverMode::R3 => int(2),
        CoverMode::R4 => ratio(8, 3),
        CoverMode::General => {
            let r = i64::from(r);
            let shift = if r % 2 == 0 { r + 1 } else { r + 2 };
            ratio(3 * r, 4) - ratio(r, 4 * shift)
        }
        CoverMode::Clique42 => int(4),
    }
}

/// Weight schedule `α(r)` of the general construction.
pub fn alpha(r: u32) -> Rational {
    let r = i64::from(r);
    if r % 2 == 0 {
        ratio(r + 2, 2 * (r + 1))
    } else {
        ratio(r + 3, 2 * (r + 2))
    }
}

struct Builder<'a> {
    h: &'a Hypergraph,
    s: MatchingStructure,
    cover: FractionalCover,
    notes: Vec<String>,
}

impl<'a> Builder<'a> {
    fn new(h: &'a Hypergraph) -> Result<Self> {
        let m = matching_number(h, h.r() - 1)?.witness;
        let s = classify_trusted(h, &m)?;
        Ok(Builder {
            h,
            s,
            cover: FractionalCover::new(h.r() - 1),
            notes: Vec::new(),
        })
    }

    fn rm1(&self) -> usize {
        self.h.r() as usize - 1
    }

    /// Adds `w` to each (r-1)-subset of `set` and returns the weight added.
    fn spread(&mut self, set: &[u32], w: &Rational) -> Rational {
        let mut total = Rational::from_integer(0.into());
        for x in subsets(set, self.rm1()).collect::<Vec<_>>() {
            self.cover.add(x, w);
            total += w;
        }
        total
    }

    fn put(&mut self, set: Vec<u32>, w: &Rational) -> Rational {
        self.cover.add(set, w);
        w.clone()
    }

    /// `w` on each (r-1)-set made of `v` and r-2 vertices of `edge`.
    fn star(&mut self, edge: &[u32], v: u32, w: &Rational) -> Rational {
        let mut total = Rational::from_integer(0.into());
        for core in subsets(edge, self.rm1() - 1).collect::<Vec<_>>() {
            self.cover.add(union(&core, &[v]), w);
            total += w;
        }
        total
    }

    fn v(&self, e: usize) -> Result<u32> {
        self.s.v(e).ok_or_else(|| {
            Error::TheoremViolation(format!(
                "{} has {} indispensable sets but no common outside vertex",
                fmt_set(&self.s.matching[e]),
                self.s.class[e]
            ))
        })
    }

    /// `w(e)` for an `M_1` edge: an (r-1)-set inside every edge of
    /// `T_1(e) ∪ B(e)`, preferring the indispensable set itself.
    fn common_set(&self, e: usize) -> Option<Vec<u32>> {
        let mut all = self.s.type1[e].iter().chain(&self.s.bad[e]);
        let first = all.next()?.clone();
        let common = all.fold(first, |acc, g| intersection(&acc, g));
        let x = &self.s.indispensable[e][0];
        if is_subset(x, &common) {
            Some(x.clone())
        } else {
            subsets(&common, self.rm1()).next()
        }
    }

    /// `M_1` schedule: either `half` on `w(e)`, or `spread_weight` on each
    /// (r-1)-subset of the unique type-1 edge.
    fn m1_extra(&mut self, e: usize, spread_weight: &Rational) -> Result<Rational> {
        if let Some(w) = self.common_set(e) {
            return Ok(self.put(w, &ratio(1, 2)));
        }
        match self.s.type1[e].as_slice() {
            [f] => {
                let f = f.clone();
                Ok(self.spread(&f, spread_weight))
            }
            _ => Err(Error::TheoremViolation(format!(
                "M_1 edge {} has no common set and several type-1 edges",
                fmt_set(&self.s.matching[e])
            ))),
        }
    }

    fn single_bad_set(&self, e: usize) -> Result<Option<Vec<u32>>> {
        let sets = bad_edge_hitting_sets(&self.s, e);
        match sets.len() {
            0 => Ok(None),
            1 => Ok(sets.into_iter().next()),
            n => Err(Error::TheoremViolation(format!(
                "bad edges at {} need {n} (r-1)-sets, expected one",
                fmt_set(&self.s.matching[e])
            ))),
        }
    }

    fn record(&mut self, e: usize, size: &Rational, budget: &Rational) -> Result<()> {
        let line = format!(
            "e={} class=M_{} t_e={} budget={}",
            fmt_set(&self.s.matching[e]),
            self.s.class[e],
            fmt_pq(size),
            fmt_pq(budget)
        );
        if size > budget {
            return Err(Error::TheoremViolation(format!(
                "per-edge budget exceeded: {line}"
            )));
        }
        self.notes.push(line);
        Ok(())
    }

    fn finish(self, mode: CoverMode) -> Result<CoverCertificate> {
        let bound = bound_factor(mode, self.h.r()) * int(self.s.len() as i64);
        let mut cert = verify_cover(
            self.h,
            self.h.r() - 1,
            &Cover::Fractional(self.cover),
            Some(&bound),
        );
        if !cert.verified {
            return Err(Error::TheoremViolation(format!(
                "constructed cover failed verification: {}",
                cert.transcript.join("; ")
            )));
        }
        let mut transcript = vec![format!("maximum matching size {}", self.s.len())];
        transcript.extend(self.notes);
        transcript.append(&mut cert.transcript);
        cert.transcript = transcript;
        Ok(cert)
    }
}

/// `1/2` on every (r-1)-subset of every `M`-edge, plus `1/2` on `p(e)` or
/// `1/(2(r-1))` on each (r-1)-set through `v(e)` and r-2 vertices of `e`.
/// Size at most `(3r/4)|M|`.
pub fn weak_cover(h: &Hypergraph) -> Result<CoverCertificate> {
    if h.r() < 2 {
        return Err(Error::InvalidArgument("weak cover needs r >= 2".into()));
    }
    let r = i64::from(h.r());
    let mut b = Builder::new(h)?;
    let half = ratio(1, 2);
    let budget = bound_factor(CoverMode::Weak, h.r());
    for e in 0..b.s.len() {
        let edge = b.s.matching[e].clone();
        let mut size = b.spread(&edge, &half);
        match b.s.friend[e].clone() {
            Friend::SharedSet(p) => size += b.put(p, &half),
            Friend::ExternalVertex(v) => size += b.star(&edge, v, &ratio(1, 2 * (r - 1))),
            Friend::None => {}
        }
        b.record(e, &size, &budget)?;
    }
    b.finish(CoverMode::Weak)
}

/// The r = 3 construction, size at most `2|M|`.
pub fn cover_r3(h: &Hypergraph) -> Result<CoverCertificate> {
    if h.r() != 3 {
        return Err(Error::InvalidArgument(format!(
            "cover_r3 needs r = 3, got {}",
            h.r()
        )));
    }
    let mut b = Builder::new(h)?;
    let half = ratio(1, 2);
    let budget = int(2);
    for e in 0..b.s.len() {
        let edge = b.s.matching[e].clone();
        let size = match b.s.class[e] {
            0 => b.spread(&edge, &ratio(2, 3)),
            1 => b.spread(&edge, &half) + b.m1_extra(e, &ratio(1, 6))?,
            2 => {
                let y = pairing_cover(&b.s.type1[e], 3);
                let [y] = <[Vec<u32>; 1]>::try_from(y).map_err(|_| {
                    Error::TheoremViolation("M_2 edge without exactly two type-1 edges".into())
                })?;
                b.spread(&edge, &half) + b.put(y, &half)
            }
            _ => {
                let v = b.v(e)?;
                b.spread(&union(&edge, &[v]), &ratio(1, 3))
            }
        };
        b.record(e, &size, &budget)?;
    }
    b.finish(CoverMode::R3)
}

/// The r = 4 construction for (r-1) = 3, size at most `(8/3)|M|`.
pub fn cover_r4(h: &Hypergraph) -> Result<CoverCertificate> {
    if h.r() != 4 {
        return Err(Error::InvalidArgument(format!(
            "cover_r4 needs r = 4, got {}",
            h.r()
        )));
    }
    let mut b = Builder::new(h)?;
    let half = ratio(1, 2);
    let budget = ratio(8, 3);
    for e in 0..b.s.len() {
        let edge = b.s.matching[e].clone();
        let size = match b.s.class[e] {
            0 => b.spread(&edge, &ratio(2, 3)),
            1 => b.spread(&edge, &half) + b.m1_extra(e, &ratio(1, 6))?,
            2 => {
                let mut size = b.spread(&edge, &half);
                for y in pairing_cover(&b.s.type1[e], 4) {
                    size += b.put(y, &half);
                }
                if let Some(z) = b.single_bad_set(e)? {
                    size += b.put(z, &ratio(1, 6));
                }
                size
            }
            _ => {
                let mut size = b.spread(&edge, &ratio(1, 3));
                let covering = pairing_cover(&b.s.type1[e], 4);
                if covering.len() > 2 {
                    return Err(Error::TheoremViolation(format!(
                        "M+ edge {} needs more than two triples",
                        fmt_set(&edge)
                    )));
                }
                for y in covering {
                    size += b.put(y, &ratio(2, 3));
                }
                size
            }
        };
        b.record(e, &size, &budget)?;
    }
    b.finish(CoverMode::R4)
}

/// The construction for r >= 5 with weights driven by `α(r)`; size at most
/// `(3r/4 - r/(4(r+1)))|M|` for even r and `(3r/4 - r/(4(r+2)))|M|` for odd r.
pub fn cover_general(h: &Hypergraph) -> Result<CoverCertificate> {
    let r = h.r();
    if r < 5 {
        return Err(Error::InvalidArgument(format!(
            "cover_general needs r >= 5, got {r}"
        )));
    }
    let ri = i64::from(r);
    let a = alpha(r);
    let one_minus_a = int(1) - &a;
    let half = ratio(1, 2);
    let budget = bound_factor(CoverMode::General, r);

    let mut b = Builder::new(h)?;
    for e in 0..b.s.len() {
        let edge = b.s.matching[e].clone();
        let i = b.s.class[e];
        let (size, case_budget) = if b.s.plus[e] {
            let v = b.v(e)?;
            let size = b.spread(&edge, &one_minus_a) + b.star(&edge, v, &(&a / int(ri - 1)));
            let cb = int(ri) * &one_minus_a
                + Rational::from_integer(binomial(r.into(), 2).into()) * &a / int(ri - 1);
            (size, cb)
        } else if i == 0 {
            (b.spread(&edge, &a), int(ri) * &a)
        } else if i == 1 {
            let size = b.spread(&edge, &half) + b.m1_extra(e, &ratio(1, 2 * ri))?;
            (size, ratio(ri + 1, 2))
        } else if i + 2 < r as usize {
            let mut size = b.spread(&edge, &a);
            for y in pairing_cover(&b.s.type1[e], r) {
                size += b.put(y, &one_minus_a);
            }
            let cb = int(ri) * &a + &one_minus_a * int((ri - 3 + 1) / 2);
            (size, cb)
        } else {
            // i = r - 2
            let mut size = b.spread(&edge, &half);
            for y in pairing_cover(&b.s.type1[e], r) {
                size += b.put(y, &half);
            }
            if let Some(z) = b.single_bad_set(e)? {
                size += b.put(z, &(&a - &half));
            }
            let cb = ratio(ri, 2) + &half * int((ri - 2 + 1) / 2) + &a - &half;
            (size, cb)
        };
        if size > case_budget {
            return Err(Error::TheoremViolation(format!(
                "{}: t_e = {} above its case budget {}",
                fmt_set(&edge),
                fmt_pq(&size),
                fmt_pq(&case_budget)
            )));
        }
        b.record(e, &size, &budget)?;
    }
    b.finish(CoverMode::General)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_factors() {
        assert_eq!(bound_factor(CoverMode::General, 5), ratio(25, 7));
        assert_eq!(bound_factor(CoverMode::General, 6), ratio(30, 7));
        assert_eq!(bound_factor(CoverMode::Weak, 4), int(3));
        assert_eq!(alpha(5), ratio(4, 7));
        assert_eq!(alpha(6), ratio(4, 7));
    }

    #[test]
    fn simplex_covers() {
        let c = weak_cover(&Hypergraph::simplex(4).unwrap()).unwrap();
        assert!(c.verified && c.size <= int(3));
        let c = cover_r3(&Hypergraph::simplex(3).unwrap()).unwrap();
        assert!(c.verified && c.size <= int(2));
        let c = cover_r4(&Hypergraph::example("k6_quad").unwrap()).unwrap();
        assert!(c.verified && c.size <= int(8));
        let c = cover_general(&Hypergraph::simplex(5).unwrap()).unwrap();
        assert!(c.verified && c.size <= ratio(25, 7));
        let c = cover_general(&Hypergraph::simplex(6).unwrap()).unwrap();
        assert!(c.verified && c.size <= ratio(30, 7));
    }

    #[test]
    fn single_edges() {
        let h = Hypergraph::parse("6 4\n1 2 3 4\n").unwrap();
        assert_eq!(weak_cover(&h).unwrap().size, int(2));
        assert_eq!(cover_r4(&h).unwrap().size, ratio(8, 3));
    }

    #[test]
    fn empty_hypergraphs() {
        assert_eq!(cover_r3(&Hypergraph::empty(5, 3)).unwrap().size, int(0));
        assert_eq!(
            cover_general(&Hypergraph::empty(7, 5)).unwrap().size,
            int(0)
        );
    }

    #[test]
    fn wrong_uniformity() {
        let h = Hypergraph::simplex(4).unwrap();
        assert!(cover_r3(&h).is_err());
        assert!(cover_general(&h).is_err());
        assert!(cover_r4(&Hypergraph::simplex(3).unwrap()).is_err());
    }
}
