//! The fine and coarse filtrations of `K^(n)` and the resolutions of their
//! factors.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FineDegree, Monomial};
use crate::resolution::complexes::{
    en_ranks, first_row_complex_ranks, koszul_ranks, ComplexRanks,
};
use crate::scroll::ScrollData;
use crate::symbolic::{enumerate_eligible, EligibleTuple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorKind {
    /// `Sym_{r-1}(coker psi_{>k}) (x) S/P_k`, twisted.
    SymmetricPower,
    /// `J (x) S/P_j`, twisted, where `J` is generated by the first row of
    /// `psi_{>j}`. `base` is the tuple of length `j` starting the chain of
    /// neighbours that ends at the descriptor's tuple.
    FirstRow { cutoff: usize, base: EligibleTuple },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorDescriptor {
    pub tuple: EligibleTuple,
    pub kind: FactorKind,
    /// Degree of the global twist applied to the factor's resolution.
    pub shift: FineDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filtration {
    Fine,
    Coarse,
}

impl FactorDescriptor {
    fn symmetric(data: &ScrollData, a: EligibleTuple) -> Self {
        let mut e = a.multi_shift(data.ell());
        e[a.k()] += a.f as i64 + 1;
        let shift = FineDegree::new(data.sigma_dot(&e), 0, e);
        Self { tuple: a, kind: FactorKind::SymmetricPower, shift }
    }

    fn first_row(data: &ScrollData, a: EligibleTuple, base: EligibleTuple) -> Self {
        let mut e = base.multi_shift(data.ell());
        e[base.k()] += base.f as i64;
        let shift = FineDegree::new(data.sigma_dot(&e) + 1, -1, e);
        Self { tuple: a, kind: FactorKind::FirstRow { cutoff: base.k(), base }, shift }
    }

    /// The block cutoff of the factor: `k` for symmetric-power factors, `j`
    /// for first-row factors.
    pub fn cutoff(&self) -> usize {
        match &self.kind {
            FactorKind::SymmetricPower => self.tuple.k(),
            FactorKind::FirstRow { cutoff, .. } => *cutoff,
        }
    }

    /// The monomials of `K^(n)` the factor adds to the filtration.
    pub fn generators(&self, data: &ScrollData) -> Vec<Monomial> {
        match &self.kind {
            FactorKind::SymmetricPower => {
                let head = self.tuple.head(data);
                (1..=self.tuple.r as usize)
                    .map(|u| head.mul(&data.var(self.tuple.k() + 1, u)))
                    .collect()
            }
            FactorKind::FirstRow { cutoff, base } => {
                let head = base.head(data);
                (cutoff + 1..=data.ell())
                    .flat_map(|u| (1..=data.sigma_at(u) as usize).map(move |c| (u, c)))
                    .map(|(u, c)| head.mul(&data.var(u, c)))
                    .collect()
            }
        }
    }
}

/// Eligible and either `k = l - 1` or `r(a) < sigma_{k+1}`.
pub fn is_eligible_prime(data: &ScrollData, a: &EligibleTuple) -> bool {
    a.k() + 1 == data.ell() || a.r < data.sigma()[a.k()]
}

/// One symmetric-power factor per eligible tuple, descending.
pub fn filtration_fine(data: &ScrollData) -> Vec<FactorDescriptor> {
    enumerate_eligible(data)
        .into_iter()
        .map(|a| FactorDescriptor::symmetric(data, a))
        .collect()
}

/// One factor per eligible' tuple `a`, descending. If `a = N^s(b)` for a
/// maximal chain `b, N(b), ..., N^{s-1}(b)` of tuples with
/// `r = sigma_{k+1}` and `s >= 1`, the factor is a first-row factor with
/// cutoff `j = len(b)`; otherwise it equals the fine factor.
pub fn filtration_coarse(data: &ScrollData) -> Vec<FactorDescriptor> {
    enumerate_eligible(data)
        .into_iter()
        .filter(|a| is_eligible_prime(data, a))
        .map(|a| {
            let mut base = a.clone();
            while let Some((&last, prefix)) = base.a.split_last() {
                let prev = EligibleTuple::new(data, prefix.to_vec()).expect("prefixes are eligible");
                if prev.f == last && prev.r == data.sigma()[prev.k()] {
                    base = prev;
                } else {
                    break;
                }
            }
            if base == a {
                FactorDescriptor::symmetric(data, a)
            } else {
                FactorDescriptor::first_row(data, a, base)
            }
        })
        .collect()
}

pub fn filtration(data: &ScrollData, which: Filtration) -> Vec<FactorDescriptor> {
    match which {
        Filtration::Fine => filtration_fine(data),
        Filtration::Coarse => filtration_coarse(data),
    }
}

/// `(F (x) Koszul(G_{<=k}))` twisted by the descriptor's shift, where `F` is
/// the Eagon-Northcott or first-row complex.
pub fn factor_resolution(data: &ScrollData, d: &FactorDescriptor) -> ComplexRanks {
    let k = d.cutoff();
    let head = match &d.kind {
        FactorKind::SymmetricPower => en_ranks(data, &d.tuple),
        FactorKind::FirstRow { cutoff, .. } => {
            first_row_complex_ranks(data, *cutoff).expect("cutoff below l")
        }
    };
    let koszul = koszul_ranks(data, k).expect("cutoff below l");
    head.tensor(&koszul).twist(&d.shift)
}

pub fn factor_resolutions(data: &ScrollData, which: Filtration) -> Vec<(FactorDescriptor, ComplexRanks)> {
    filtration(data, which)
        .into_par_iter()
        .map(|d| {
            let c = factor_resolution(data, &d);
            (d, c)
        })
        .collect()
}

/// The direct sum of the factor resolutions: a (generally non-minimal)
/// resolution of `K^(n)` of length `sum sigma + l - 2`.
pub fn total_resolution(data: &ScrollData, which: Filtration) -> ComplexRanks {
    let parts: Vec<ComplexRanks> = factor_resolutions(data, which).into_iter().map(|(_, c)| c).collect();
    ComplexRanks::direct_sum(&parts)
}
