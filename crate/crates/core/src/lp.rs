//! Exact rational simplex for packing-form linear programs
//! `max c·x  s.t.  A x <= b,  x >= 0` with `b >= 0`.
//!
//! The slack basis is feasible from the start, so no phase one is needed.
//! Pivots follow Bland's rule (lowest-index entering column, lowest-index
//! basic variable among tied ratios), which cannot cycle.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct PackingLp {
    pub objective: Vec<Rational>,
    /// one row per constraint, each of length `objective.len()`
    pub rows: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    /// optimal primal point
    pub primal: Vec<Rational>,
    /// optimal dual point, one entry per constraint
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

impl PackingLp {
    pub fn solve(&self) -> Result<LpSolution> {
        let vars = self.objective.len();
        let cons = self.rows.len();
        if self.rhs.len() != cons || self.rows.iter().any(|r| r.len() != vars) {
            return Err(Error::InvalidArgument("inconsistent LP dimensions".into()));
        }
        if self.rhs.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument("packing LP needs b >= 0".into()));
        }

        let width = vars + cons + 1;
        let rhs_col = vars + cons;
        let mut tab: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .enumerate()
            .map(|(i, (row, b))| {
                let mut t = vec![Rational::zero(); width];
                t[..vars].clone_from_slice(row);
                t[vars + i] = Rational::from_integer(1.into());
                t[rhs_col] = b.clone();
                t
            })
            .collect();
        let mut obj = vec![Rational::zero(); width];
        for (o, c) in obj.iter_mut().zip(&self.objective) {
            *o = -c.clone();
        }
        let mut basis: Vec<usize> = (vars..vars + cons).collect();

        let mut pivots = 0;
        while let Some(enter) = (0..rhs_col).find(|&j| obj[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in tab.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs_col] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((pivot_row, _)) = leave else {
                return Err(Error::InvalidArgument("LP is unbounded".into()));
            };
            pivot(&mut tab, &mut obj, pivot_row, enter);
            basis[pivot_row] = enter;
            pivots += 1;
        }

        let mut primal = vec![Rational::zero(); vars];
        for (i, &b) in basis.iter().enumerate() {
            if b < vars {
                primal[b] = tab[i][rhs_col].clone();
            }
        }
        let dual = obj[vars..vars + cons].to_vec();
        Ok(LpSolution {
            value: obj[rhs_col].clone(),
            primal,
            dual,
            pivots,
        })
    }
}

fn pivot(tab: &mut [Vec<Rational>], obj: &mut [Rational], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for v in tab[row].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let support: Vec<usize> = (0..tab[row].len())
        .filter(|&j| !tab[row][j].is_zero())
        .collect();
    let pivot_row = tab[row].clone();
    let eliminate = |target: &mut [Rational]| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for &j in &support {
            target[j] -= &factor * &pivot_row[j];
        }
    };
    for (i, t) in tab.iter_mut().enumerate() {
        if i != row {
            eliminate(t);
        }
    }
    eliminate(obj);
}
