//! Generators of the symbolic Rees algebra `sum_n K^(n) u^n` and the
//! factorization of each generator of `K^(n)` over them.

use std::fmt;

use serde::Serialize;

use crate::algebra::Monomial;
use crate::error::{Error, Result};
use crate::scroll::{ScrollData, VarId};
use crate::symbolic::{generating_set_with_tuples, LElement};

/// `T_{i,j} u^k` with `j <= sigma_i` and `1 <= k <= sigma_i + 1 - j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ReesGenerator {
    pub var: VarId,
    pub power: u32,
}

impl fmt::Display for ReesGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*u^{}", self.var, self.power)
    }
}

pub fn rees_generating_set(data: &ScrollData) -> Vec<ReesGenerator> {
    let mut out = Vec::new();
    for block in 1..=data.ell() {
        let s = data.sigma_at(block);
        for slot in 1..=s {
            for power in 1..=s + 1 - slot {
                out.push(ReesGenerator { var: VarId { block, slot: slot as usize }, power });
            }
        }
    }
    out
}

/// The generator bound: `T_{i,j} u^k` needs `k <= sigma_i + 1 - j`.
pub fn is_rees_generator(data: &ScrollData, g: &ReesGenerator) -> bool {
    let s = data.sigma_at(g.var.block) as usize;
    g.var.slot <= s && g.power >= 1 && g.power as usize <= s + 1 - g.var.slot
}

/// `theta u^n = prod_{i<=k} (T_{i,1} u^{sigma_i})^{a_i} (T_{k+1,1} u^{sigma_{k+1}})^{f}
/// T_{k+1,j} u^{sigma_{k+1} + 1 - r}` for `theta = T^a T_{k+1,1}^f T_{k+1,j}`.
pub fn factor_element(data: &ScrollData, g: &LElement) -> Vec<ReesGenerator> {
    let t = &g.tuple;
    let mut out = Vec::new();
    for (i, &a) in t.a.iter().enumerate() {
        let power = data.sigma()[i];
        out.extend((0..a).map(|_| ReesGenerator { var: VarId { block: i + 1, slot: 1 }, power }));
    }
    let next = t.k() + 1;
    let s = data.sigma_at(next);
    out.extend((0..t.f).map(|_| ReesGenerator { var: VarId { block: next, slot: 1 }, power: s }));
    out.push(ReesGenerator { var: g.var(), power: s + 1 - t.r });
    out
}

/// Factors an element of the generating set of `K^(n)` over the Rees
/// generators.
pub fn factor_over_s(data: &ScrollData, g: &Monomial) -> Result<Vec<ReesGenerator>> {
    generating_set_with_tuples(data)
        .into_iter()
        .find(|e| &e.monomial == g)
        .map(|e| factor_element(data, &e))
        .ok_or_else(|| {
            Error::Domain(format!(
                "{} is not a minimal generator of K^({})",
                data.format_monomial(g),
                data.n()
            ))
        })
}

pub fn u_degree(factors: &[ReesGenerator]) -> u32 {
    factors.iter().map(|g| g.power).sum()
}

pub fn monomial_product(data: &ScrollData, factors: &[ReesGenerator]) -> Monomial {
    factors
        .iter()
        .fold(data.one(), |acc, g| acc.mul(&data.var(g.var.block, g.var.slot)))
}
