//! Free modules as multisets of generator degrees, and the rank/shift data
//! of the complexes assembled into the resolution of `K^(n)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::FineDegree;
use crate::error::{Error, Result};
use crate::scroll::{ScrollData, VarId};
use crate::symbolic::EligibleTuple;

/// A graded free `S`-module, recorded by the degrees of its basis elements.
/// `S(-d)` contributes the degree `d`. Degrees are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct GradedFreeModule {
    pub shifts: Vec<FineDegree>,
}

impl GradedFreeModule {
    pub fn new(mut shifts: Vec<FineDegree>) -> Self {
        shifts.sort();
        Self { shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(
            self.shifts
                .iter()
                .flat_map(|a| other.shifts.iter().map(move |b| a.add(b)))
                .collect(),
        )
    }

    pub fn twist(&self, by: &FineDegree) -> Self {
        Self::new(self.shifts.iter().map(|s| s.add(by)).collect())
    }

    /// Distinct total degrees of the basis.
    pub fn total_degrees(&self) -> Vec<i64> {
        let mut t: Vec<i64> = self.shifts.iter().map(FineDegree::total).collect();
        t.dedup();
        t
    }
}

/// The free modules of a complex by homological position. Trailing zero
/// modules are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ComplexRanks {
    pub modules: Vec<GradedFreeModule>,
}

impl ComplexRanks {
    pub fn new(mut modules: Vec<GradedFreeModule>) -> Self {
        while modules.last().is_some_and(|m| m.rank() == 0) {
            modules.pop();
        }
        Self { modules }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        if self.modules.is_empty() || other.modules.is_empty() {
            return Self::default();
        }
        let len = self.modules.len() + other.modules.len() - 1;
        let mut out = vec![Vec::new(); len];
        for (p, a) in self.modules.iter().enumerate() {
            for (q, b) in other.modules.iter().enumerate() {
                out[p + q].extend(a.tensor(b).shifts);
            }
        }
        Self::new(out.into_iter().map(GradedFreeModule::new).collect())
    }

    pub fn twist(&self, by: &FineDegree) -> Self {
        Self::new(self.modules.iter().map(|m| m.twist(by)).collect())
    }

    /// Positionwise direct sum.
    pub fn direct_sum(parts: &[ComplexRanks]) -> Self {
        let len = parts.iter().map(|c| c.modules.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); len];
        for c in parts {
            for (p, m) in c.modules.iter().enumerate() {
                out[p].extend(m.shifts.iter().cloned());
            }
        }
        Self::new(out.into_iter().map(GradedFreeModule::new).collect())
    }

    /// `(position, total degree) -> rank`.
    pub fn graded_ranks(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for (p, m) in self.modules.iter().enumerate() {
            for s in &m.shifts {
                *out.entry((p, s.total())).or_insert(0) += 1;
            }
        }
        out
    }

    /// `max_p (max total shift at p - p)`, an upper bound for the regularity
    /// of the resolved module.
    pub fn regularity_bound(&self) -> Option<i64> {
        self.modules
            .iter()
            .enumerate()
            .filter_map(|(p, m)| m.shifts.iter().map(FineDegree::total).max().map(|t| t - p as i64))
            .max()
    }

    /// Differences between consecutive total-degree bands, or `None` when
    /// some position is not concentrated in a single total degree.
    pub fn band_gaps(&self) -> Option<Vec<i64>> {
        let mut bands = Vec::with_capacity(self.modules.len());
        for m in &self.modules {
            match m.total_degrees().as_slice() {
                [t] => bands.push(*t),
                _ => return None,
            }
        }
        Some(bands.windows(2).map(|w| w[1] - w[0]).collect())
    }
}

/// All sums of `q`-element subsets of `gens` (the basis degrees of the
/// `q`-th exterior power).
pub fn exterior_power(gens: &[FineDegree], q: usize, ell: usize) -> Vec<FineDegree> {
    fn go(gens: &[FineDegree], q: usize, start: usize, acc: FineDegree, out: &mut Vec<FineDegree>) {
        if q == 0 {
            out.push(acc);
            return;
        }
        for i in start..=gens.len().saturating_sub(q) {
            if i >= gens.len() {
                break;
            }
            go(gens, q - 1, i + 1, acc.add(&gens[i]), out);
        }
    }
    let mut out = Vec::new();
    if q <= gens.len() {
        go(gens, q, 0, FineDegree::zero(ell), &mut out);
    }
    out
}

/// Basis degrees of `E`: `E1 = (-1,1;0)` and `E2 = 0`, so that
/// `psi: F -> E` is homogeneous.
fn e_basis(ell: usize) -> [FineDegree; 2] {
    [FineDegree::new(-1, 1, vec![0; ell]), FineDegree::zero(ell)]
}

/// `Sym_q E`: degrees `(-a, a; 0)` for `a = 0..=q`.
fn sym_e(q: usize, ell: usize) -> Vec<FineDegree> {
    (0..=q as i64).map(|a| e_basis(ell)[0].scale(a)).collect()
}

/// `D_q E*`: degrees `(a, -a; 0)` for `a = 0..=q`.
fn divided_e_dual(q: usize, ell: usize) -> Vec<FineDegree> {
    (0..=q as i64).map(|a| e_basis(ell)[0].scale(-a)).collect()
}

/// `Lambda^2 E*`.
fn det_e_dual(ell: usize) -> FineDegree {
    e_basis(ell)[0].scale(-1)
}

/// Basis degrees of `F_{>k}`: the columns of `psi` in blocks `u > k`,
/// `(sigma_u - c, c; e_u)` for `c = 1..=sigma_u`.
pub fn f_basis(data: &ScrollData, k: usize) -> Vec<FineDegree> {
    let ell = data.ell();
    let mut out = Vec::new();
    for u in k + 1..=ell {
        let s = data.sigma_at(u) as i64;
        for c in 1..=s {
            let mut e = vec![0; ell];
            e[u - 1] = 1;
            out.push(FineDegree::new(s - c, c, e));
        }
    }
    out
}

/// Basis degrees of `G_{<=k}`: the variables of blocks `u <= k`.
pub fn g_basis(data: &ScrollData, k: usize) -> Vec<FineDegree> {
    let mut out = Vec::new();
    for u in 1..=k {
        for c in 1..=data.sigma_at(u) as usize + 1 {
            out.push(data.var_fdeg(VarId { block: u, slot: c }));
        }
    }
    out
}

fn check_cutoff(data: &ScrollData, k: usize) -> Result<()> {
    if k >= data.ell() {
        return Err(Error::Domain(format!("block cutoff {k} outside 0..={}", data.ell() - 1)));
    }
    Ok(())
}

/// The Koszul complex on the variables of blocks `1..=k`, resolving `S/P_k`.
pub fn koszul_ranks(data: &ScrollData, k: usize) -> Result<ComplexRanks> {
    check_cutoff(data, k)?;
    let g = g_basis(data, k);
    Ok(ComplexRanks::new(
        (0..=g.len())
            .map(|q| GradedFreeModule::new(exterior_power(&g, q, data.ell())))
            .collect(),
    ))
}

/// The Eagon-Northcott family member resolving `Sym_{r-1}(coker psi_{>k})`
/// with `r = r(a)`:
/// `Sym_{r-1-p} E (x) Lambda^p F` for `p < r`, then
/// `D_{p-r} E* (x) Lambda^{p+1} F (x) Lambda^2 E*` for `r <= p < m`.
pub fn en_ranks(data: &ScrollData, a: &EligibleTuple) -> ComplexRanks {
    let ell = data.ell();
    let f = f_basis(data, a.k());
    let m = f.len();
    let r = a.r as usize;
    let mut modules = Vec::new();
    for p in 0..r {
        let sym = GradedFreeModule::new(sym_e(r - 1 - p, ell));
        modules.push(sym.tensor(&GradedFreeModule::new(exterior_power(&f, p, ell))));
    }
    for p in r..m {
        let d = GradedFreeModule::new(divided_e_dual(p - r, ell));
        let wedge = GradedFreeModule::new(exterior_power(&f, p + 1, ell));
        modules.push(d.tensor(&wedge).twist(&det_e_dual(ell)));
    }
    ComplexRanks::new(modules)
}

/// `D_p E* (x) Lambda^{p+1} F_{>k}` for `0 <= p < m`: resolves the ideal of
/// first-row entries of `psi_{>k}`, up to the twist `(1,-1;0)`.
pub fn first_row_complex_ranks(data: &ScrollData, k: usize) -> Result<ComplexRanks> {
    check_cutoff(data, k)?;
    let ell = data.ell();
    let f = f_basis(data, k);
    Ok(ComplexRanks::new(
        (0..f.len())
            .map(|p| {
                GradedFreeModule::new(divided_e_dual(p, ell))
                    .tensor(&GradedFreeModule::new(exterior_power(&f, p + 1, ell)))
            })
            .collect(),
    ))
}
