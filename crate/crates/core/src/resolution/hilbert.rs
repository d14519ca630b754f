//! Fine Hilbert functions of `S`, `A` and `K^(n)`, and the Euler
//! characteristic of a complex of free modules.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::FineDegree;
use crate::resolution::complexes::ComplexRanks;
use crate::resolution::filtration::{factor_resolution, FactorDescriptor};
use crate::scroll::{a_monomial_basis, compositions, ScrollData};

/// Fine Hilbert function of `S` through total degree `bound`, grouped by
/// total degree. Only nonzero values are stored.
pub fn s_hilbert(data: &ScrollData, bound: u32) -> Vec<HashMap<FineDegree, i64>> {
    let mut levels: Vec<HashMap<FineDegree, i64>> = vec![HashMap::new(); bound as usize + 1];
    levels[0].insert(FineDegree::zero(data.ell()), 1);
    for &v in data.vars() {
        let step = data.var_fdeg(v);
        for t in 0..bound as usize {
            let cur: Vec<(FineDegree, i64)> = levels[t].iter().map(|(d, &c)| (d.clone(), c)).collect();
            for (d, c) in cur {
                *levels[t + 1].entry(d.add(&step)).or_insert(0) += c;
            }
        }
    }
    levels
}

/// `sum_p (-1)^p sum_{s in shifts(p)} HS_S(delta - s)` at every `delta` of
/// total degree `<= bound`; zero values are dropped.
pub fn euler_characteristic(data: &ScrollData, c: &ComplexRanks, bound: u32) -> BTreeMap<FineDegree, i64> {
    let mut weights: HashMap<FineDegree, i64> = HashMap::new();
    for (p, m) in c.modules.iter().enumerate() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        for s in m.shifts.iter().filter(|s| s.total() <= bound as i64) {
            *weights.entry(s.clone()).or_insert(0) += sign;
        }
    }
    weights.retain(|_, w| *w != 0);
    let hs = s_hilbert(data, bound);
    let mut acc: HashMap<FineDegree, i64> = HashMap::new();
    for (g, w) in &weights {
        for level in hs.iter().take((bound as i64 - g.total()) as usize + 1) {
            for (h, c) in level {
                *acc.entry(g.add(h)).or_insert(0) += w * c;
            }
        }
    }
    acc.into_iter().filter(|&(_, v)| v != 0).collect()
}

/// The fine Hilbert function of `K^(n) = A_{>=n}`: value 1 at every scroll
/// degree with `alpha >= n` and total degree `<= bound`.
pub fn ideal_fine_hilbert(data: &ScrollData, bound: u32) -> BTreeMap<FineDegree, i64> {
    (0..=bound)
        .flat_map(|t| a_monomial_basis(data, t))
        .filter(|d| d.alpha >= data.n() as i64)
        .map(|d| (d, 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub ok: bool,
    /// Number of fine degrees compared.
    pub checked: usize,
    /// `(degree, expected, observed)` of the first disagreement.
    pub mismatch: Option<(FineDegree, i64, i64)>,
}

/// Compares the Euler characteristic of `c` with the fine Hilbert function
/// of `K^(n)` at every fine degree of total degree `<= bound`.
pub fn euler_check(data: &ScrollData, c: &ComplexRanks, bound: u32) -> EulerReport {
    let got = euler_characteristic(data, c, bound);
    let want = ideal_fine_hilbert(data, bound);
    let mut keys: Vec<&FineDegree> = got.keys().chain(want.keys()).collect();
    keys.sort();
    keys.dedup();
    let mismatch = keys.iter().find_map(|&k| {
        let (w, g) = (want.get(k).copied().unwrap_or(0), got.get(k).copied().unwrap_or(0));
        (w != g).then(|| (k.clone(), w, g))
    });
    EulerReport { ok: mismatch.is_none(), checked: keys.len(), mismatch }
}

#[derive(Debug, Clone, Copy)]
pub enum HilbertTarget<'a> {
    Ring,
    Ideal,
    Factor(&'a FactorDescriptor),
}

/// Dimensions by total degree `0..=through`.
pub fn hilbert_function(data: &ScrollData, what: HilbertTarget<'_>, through: u32) -> Vec<i64> {
    match what {
        HilbertTarget::Ring => (0..=through).map(|t| a_monomial_basis(data, t).len() as i64).collect(),
        HilbertTarget::Ideal => (0..=through)
            .map(|t| {
                a_monomial_basis(data, t)
                    .iter()
                    .filter(|d| d.alpha >= data.n() as i64)
                    .count() as i64
            })
            .collect(),
        HilbertTarget::Factor(f) => {
            let chi = euler_characteristic(data, &factor_resolution(data, f), through);
            let mut out = vec![0; through as usize + 1];
            for (d, v) in chi {
                out[d.total() as usize] += v;
            }
            out
        }
    }
}

/// Number of monomials of `S` in each fine degree, by direct enumeration of
/// exponent vectors per block. Used to cross-check [`s_hilbert`].
pub fn s_hilbert_direct(data: &ScrollData, d: &FineDegree) -> i64 {
    if d.e.iter().any(|&x| x < 0) || d.alpha + d.beta != data.sigma_dot(&d.e) {
        return 0;
    }
    // Count over each block's exponent vectors with the right y-weight.
    let mut ways: HashMap<i64, i64> = HashMap::from([(0, 1)]);
    for (i, &ei) in d.e.iter().enumerate() {
        let s = data.sigma()[i] as usize;
        let mut next: HashMap<i64, i64> = HashMap::new();
        for comp in compositions(ei, s + 1) {
            let y: i64 = comp.iter().enumerate().map(|(j, &c)| j as i64 * c).sum();
            for (&b, &w) in &ways {
                *next.entry(b + y).or_insert(0) += w;
            }
        }
        ways = next;
    }
    ways.get(&d.beta).copied().unwrap_or(0)
}
