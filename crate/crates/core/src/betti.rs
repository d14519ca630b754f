//! Graded Betti numbers of `K^(n)` over `S` from Koszul homology.
//!
//! Every fine-degree component of `K^(n) = A_{>=n}` is spanned by a single
//! monomial, so in each fine degree `delta` the Koszul complex
//! `K(all variables) (x) K^(n)` has a basis indexed by the subsets `F` of
//! variables with `delta - fdeg(F)` in the support of `K^(n)`, and its
//! differentials are signed incidence matrices.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::FineDegree;
use crate::error::{Error, Result};
use crate::linalg::{rank, SparseMatrix};
use crate::scroll::{a_monomial_basis, ScrollData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, total degree d) -> beta_{i,d}`, nonzero entries only.
    pub entries: BTreeMap<(usize, i64), u64>,
    /// `(i, fine degree) -> beta`, nonzero entries only.
    pub fine: BTreeMap<(usize, FineDegree), u64>,
    /// All fine degrees of total degree `<= bound` were computed.
    pub bound: u32,
    /// Whether the total-degree rows `bound - 1` and `bound` vanish.
    pub complete: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, d: i64) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, d)| d - i as i64).max()
    }

    /// `beta_{0,d}` by total degree.
    pub fn generator_census(&self) -> BTreeMap<i64, u64> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == 0)
            .map(|(&(_, d), &b)| (d, b))
            .collect()
    }
}

/// `ceil((n - 1) / sigma_l) + 1`.
pub fn regularity_formula(data: &ScrollData) -> i64 {
    let s = *data.sigma().last().unwrap();
    ((data.n() - 1).div_ceil(s) + 1) as i64
}

/// `sum sigma + l - 2`.
pub fn pd_formula(data: &ScrollData) -> usize {
    data.sigma_sum() as usize + data.ell() - 2
}

/// Two more than `reg + pd` from the closed formulas: the last row that can
/// carry a Betti number is `reg + pd`, and completeness is read off the two
/// rows above it.
pub fn default_bound(data: &ScrollData) -> u32 {
    (regularity_formula(data) + pd_formula(data) as i64 + 2) as u32
}

struct Subsets {
    alpha: Vec<i64>,
    beta: Vec<i64>,
    e: Vec<Vec<i64>>,
}

impl Subsets {
    fn new(data: &ScrollData) -> Self {
        let nv = data.nvars();
        let size = 1usize << nv;
        let mut alpha = vec![0; size];
        let mut beta = vec![0; size];
        let mut e = vec![vec![0; data.ell()]; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let v = data.var_fdeg(data.var_id(low));
            alpha[mask] = alpha[rest] + v.alpha;
            beta[mask] = beta[rest] + v.beta;
            let mut ev = e[rest].clone();
            for (a, b) in ev.iter_mut().zip(&v.e) {
                *a += b;
            }
            e[mask] = ev;
        }
        Self { alpha, beta, e }
    }

    /// Whether `delta - fdeg(mask)` is a degree of `K^(n)`.
    fn supported(&self, delta: &FineDegree, mask: usize, n: i64) -> bool {
        delta.alpha - self.alpha[mask] >= n
            && delta.beta - self.beta[mask] >= 0
            && delta.e.iter().zip(&self.e[mask]).all(|(a, b)| a - b >= 0)
    }
}

/// `beta_i` at one fine degree, as `(i, beta)` pairs with `beta > 0`.
fn strand(data: &ScrollData, subsets: &Subsets, delta: &FineDegree) -> Vec<(usize, u64)> {
    let nv = data.nvars();
    let n = data.n() as i64;
    let field = data.field();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); nv + 1];
    let mut index = vec![usize::MAX; 1 << nv];
    for (mask, slot) in index.iter_mut().enumerate() {
        if subsets.supported(delta, mask, n) {
            let i = mask.count_ones() as usize;
            *slot = by_size[i].len();
            by_size[i].push(mask);
        }
    }
    // ranks[i] = rank of d_i: C_i -> C_{i-1}
    let mut ranks = vec![0usize; nv + 2];
    for i in 1..=nv {
        if by_size[i].is_empty() || by_size[i - 1].is_empty() {
            continue;
        }
        let mut m = SparseMatrix::new(by_size[i - 1].len());
        let minus_one = field.from_i64(-1);
        for &mask in &by_size[i] {
            let mut row = Vec::with_capacity(i);
            for (t, bit) in (0..nv).filter(|b| mask >> b & 1 == 1).enumerate() {
                let target = index[mask & !(1 << bit)];
                debug_assert!(target != usize::MAX, "multiplication stays inside K^(n)");
                row.push((target, if t % 2 == 0 { 1 } else { minus_one }));
            }
            m.push_row(row);
        }
        ranks[i] = rank(&field, &m);
    }
    (0..=nv)
        .filter_map(|i| {
            let b = by_size[i].len() - ranks[i] - ranks[i + 1];
            (b > 0).then_some((i, b as u64))
        })
        .collect()
}

/// Betti table of `K^(n)` for all fine degrees of total degree `<= bound`
/// (default [`default_bound`]).
pub fn koszul_betti(data: &ScrollData, bound: Option<u32>) -> Result<BettiTable> {
    let bound = bound.unwrap_or_else(|| default_bound(data));
    if data.nvars() > 24 {
        return Err(Error::Config(format!(
            "{} variables is beyond the Koszul oracle's reach",
            data.nvars()
        )));
    }
    let subsets = Subsets::new(data);
    let n = data.n() as i64;
    let degrees: Vec<FineDegree> = (0..=bound)
        .flat_map(|t| a_monomial_basis(data, t))
        .filter(|d| d.alpha >= n)
        .collect();
    let found: Vec<(FineDegree, Vec<(usize, u64)>)> = degrees
        .into_par_iter()
        .map(|d| {
            let s = strand(data, &subsets, &d);
            (d, s)
        })
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let mut entries = BTreeMap::new();
    let mut fine = BTreeMap::new();
    for (d, s) in found {
        for (i, b) in s {
            *entries.entry((i, d.total())).or_insert(0) += b;
            fine.insert((i, d.clone()), b);
        }
    }
    let top = bound as i64;
    let complete = bound >= 1 && !entries.keys().any(|&(_, d)| d >= top - 1);
    Ok(BettiTable { entries, fine, bound, complete })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiInvariants {
    pub pd: usize,
    pub depth: usize,
    pub reg: i64,
    pub pd_formula: usize,
    pub reg_formula: i64,
    pub pd_matches: bool,
    pub depth_is_two: bool,
    pub reg_matches: bool,
}

impl BettiInvariants {
    pub fn all_match(&self) -> bool {
        self.pd_matches && self.depth_is_two && self.reg_matches
    }
}

/// `pd`, `depth = dim S - pd` and `reg`, compared with the closed formulas.
pub fn invariants_from_betti(t: &BettiTable, data: &ScrollData) -> Result<BettiInvariants> {
    if !t.complete {
        return Err(Error::Incomplete(format!(
            "Betti table through total degree {} has nonzero entries in its top two rows",
            t.bound
        )));
    }
    let (Some(pd), Some(reg)) = (t.projective_dimension(), t.regularity()) else {
        return Err(Error::Incomplete("empty Betti table".into()));
    };
    let depth = data.nvars() - pd;
    let pd_formula = pd_formula(data);
    let reg_formula = regularity_formula(data);
    Ok(BettiInvariants {
        pd,
        depth,
        reg,
        pd_formula,
        reg_formula,
        pd_matches: pd == pd_formula,
        depth_is_two: depth == 2,
        reg_matches: reg == reg_formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(sigma: &[u32], n: u32) -> ScrollData {
        ScrollData::new(sigma.to_vec(), n, 32003).unwrap()
    }

    #[test]
    fn quadric_cone() {
        let d = data(&[1, 1], 2);
        let t = koszul_betti(&d, None).unwrap();
        assert!(t.complete);
        assert_eq!(t.get(0, 2), 3);
        let inv = invariants_from_betti(&t, &d).unwrap();
        assert_eq!((inv.pd, inv.depth, inv.reg), (2, 2, 2));
        assert!(inv.all_match());
    }

    #[test]
    fn sigma_21_n3() {
        let d = data(&[2, 1], 3);
        let t = koszul_betti(&d, None).unwrap();
        assert_eq!(t.generator_census(), BTreeMap::from([(2, 3), (3, 1)]));
        let inv = invariants_from_betti(&t, &d).unwrap();
        assert_eq!((inv.pd, inv.depth, inv.reg), (3, 2, 3));
    }

    #[test]
    fn sigma_22_n3() {
        let d = data(&[2, 2], 3);
        let inv = invariants_from_betti(&koszul_betti(&d, None).unwrap(), &d).unwrap();
        assert_eq!((inv.pd, inv.depth, inv.reg), (4, 2, 2));
    }

    #[test]
    fn nothing_below_the_generators() {
        let d = data(&[3, 1], 5);
        let t = koszul_betti(&d, None).unwrap();
        let floor = (5 + 2) / 3;
        assert!(t.entries.keys().all(|&(_, deg)| deg >= floor));
    }

    #[test]
    fn small_bound_is_incomplete() {
        let d = data(&[2, 1], 3);
        let t = koszul_betti(&d, Some(3)).unwrap();
        assert!(!t.complete);
        assert!(matches!(invariants_from_betti(&t, &d), Err(Error::Incomplete(_))));
    }
}
