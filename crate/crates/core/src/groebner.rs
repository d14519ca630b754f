//! A Buchberger engine at desk scale, a Buchberger-criterion verifier, and
//! the certificates built on top of them: Gröbner bases of `I_2(psi)` and of
//! the preimage `kappa` of `K^(n)`, and the depth-one certificate of
//! `S / kappa`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{monomials_of_degree, Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::scroll::{build_psi, minors_h, ScrollData, VarId};
use crate::symbolic::{generating_set_l, in_symbolic_power};

pub const DEFAULT_MAX_PAIRS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Polynomial>,
    pub certified: bool,
}

impl GroebnerBasis {
    pub fn leads(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    degree: u32,
}

/// Completes `gens` to the reduced Gröbner basis of the ideal they generate.
///
/// Pairs are processed by the normal strategy (smallest lcm degree, ties by
/// index), pairs with coprime leading monomials are skipped, and at most
/// `max_pairs` S-polynomials are reduced.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], max_pairs: usize) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let g = ring.monic(g);
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return Err(Error::Domain("Gröbner basis of the zero ideal requested".into()));
    }

    let lead = |p: &Polynomial| p.leading_monomial().unwrap().clone();
    let mut pairs: Vec<Pair> = Vec::new();
    let push_pairs = |pairs: &mut Vec<Pair>, basis: &[Polynomial], j: usize| {
        let lj = lead(&basis[j]);
        for (i, bi) in basis.iter().enumerate().take(j) {
            let degree = lead(bi).lcm(&lj).total_degree();
            pairs.push(Pair { i, j, degree });
        }
    };
    for j in 1..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }

    let mut reductions = 0usize;
    while !pairs.is_empty() {
        let idx = (0..pairs.len())
            .min_by_key(|&k| (pairs[k].degree, pairs[k].j, pairs[k].i))
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(idx);
        if lead(&basis[i]).is_coprime(&lead(&basis[j])) {
            continue;
        }
        reductions += 1;
        if reductions > max_pairs {
            return Err(Error::Capacity { reductions, cap: max_pairs });
        }
        let s = ring.s_polynomial(&basis[i], &basis[j])?;
        let r = ring.normal_form(&s, &basis);
        if !r.is_zero() {
            basis.push(ring.monic(&r));
            push_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    let generators = auto_reduce(ring, basis);
    let certified = verify_gb(ring, &generators).ok;
    Ok(GroebnerBasis { generators, certified })
}

/// Drops elements whose lead is divisible by another lead, reduces tails,
/// and sorts by leading monomial (descending).
fn auto_reduce(ring: &PolyRing, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)
            })
        })
        .collect();
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            ring.monic(&ring.normal_form(&minimal[i], &others))
        })
        .collect();
    reduced.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    reduced
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbVerdict {
    pub ok: bool,
    pub failing: Option<FailingPair>,
}

/// Buchberger's criterion: every S-polynomial of `candidate` reduces to zero.
/// No pair is skipped. On failure the first failing pair `(i, j)`, `i < j`,
/// in lexicographic order is reported.
pub fn verify_gb(ring: &PolyRing, candidate: &[Polynomial]) -> GbVerdict {
    if candidate.iter().any(Polynomial::is_zero) {
        return GbVerdict { ok: false, failing: None };
    }
    let pairs: Vec<(usize, usize)> = (0..candidate.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect::<Vec<_>>();
    let mut pairs = pairs;
    pairs.sort_unstable();
    let failing = pairs.par_iter().find_map_first(|&(i, j)| {
        let s = ring.s_polynomial(&candidate[i], &candidate[j]).ok()?;
        let remainder = ring.normal_form(&s, candidate);
        (!remainder.is_zero()).then_some(FailingPair { i, j, remainder })
    });
    GbVerdict { ok: failing.is_none(), failing }
}

/// `G` followed by `L` as polynomials: generators of the preimage `kappa`
/// of `K^(n)` in `S`.
pub fn kappa_generators(data: &ScrollData) -> Vec<Polynomial> {
    let ring = data.ring();
    let mut gens = minors_h(data, &build_psi(data));
    gens.extend(generating_set_l(data).into_iter().map(|m| ring.monomial(1, m)));
    gens
}

/// Standard-monomial counts `dim (S/I)_d` for `d = 0..=through_degree`.
pub fn initial_ideal_counts(gb: &GroebnerBasis, nvars: usize, through_degree: u32) -> Vec<u64> {
    let leads = gb.leads();
    (0..=through_degree)
        .map(|d| {
            monomials_of_degree(nvars, d)
                .par_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count() as u64
        })
        .collect()
}

/// Summary of the S-pairs `(m, h)` with `m` in `L` and `h` a minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SPairReport {
    pub checked: usize,
    /// Smallest `Deg` among the S-polynomials; `None` if there were none.
    pub min_deg: Option<i64>,
    /// `(index in L, index in G)` of pairs whose S-polynomial is not a
    /// monomial of `Deg >= n` or does not reduce to zero.
    pub violations: Vec<(usize, usize)>,
}

impl SPairReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn l_g_spair_report(data: &ScrollData) -> SPairReport {
    let ring = data.ring();
    let g = minors_h(data, &build_psi(data));
    let l = generating_set_l(data);
    let kappa = kappa_generators(data);
    let results: Vec<((usize, usize), Option<i64>)> = (0..l.len())
        .into_par_iter()
        .flat_map_iter(|a| (0..g.len()).map(move |b| (a, b)))
        .map(|(a, b)| {
            let m = ring.monomial(1, l[a].clone());
            let s = ring.s_polynomial(&m, &g[b]).expect("nonzero inputs");
            let deg = s
                .is_monomial()
                .then(|| s.leading_monomial().unwrap())
                .filter(|mono| in_symbolic_power(data, mono))
                .map(|mono| data.deg(mono));
            let reduces = ring.normal_form(&s, &kappa).is_zero();
            ((a, b), deg.filter(|_| reduces))
        })
        .collect();
    SPairReport {
        checked: results.len(),
        min_deg: results.iter().filter_map(|r| r.1).min(),
        violations: results.iter().filter(|r| r.1.is_none()).map(|r| r.0).collect(),
    }
}

/// Certificate that `depth S/kappa = 1`, i.e. `depth A/K^(n) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthCertificate {
    /// `T_{l, sigma_l + 1}`, a nonzerodivisor on `S/kappa`.
    pub regular: VarId,
    /// The socle witness of `S/(kappa + regular)`.
    pub witness: Monomial,
    pub enlarged_basis: GroebnerBasis,
}

/// Builds the depth certificate. With `m = ceil((n-1)/sigma_l) - 1` the
/// witness is `T_{l,1}^m T_{l,sigma_l}`: it survives modulo
/// `kappa + (T_{l,sigma_l+1})`, and every variable multiplies it into that
/// ideal. When `n - 1 <= sigma_l` this is just `T_{l,sigma_l}`.
pub fn depth_certificate(data: &ScrollData, max_pairs: usize) -> Result<DepthCertificate> {
    let ring = data.ring();
    let ell = data.ell();
    let s_last = data.sigma_at(ell) as usize;
    let regular = VarId { block: ell, slot: s_last + 1 };
    let t = data.var(ell, s_last + 1);

    let kappa = kappa_generators(data);
    if let Some(g) = kappa.iter().find(|g| t.divides(g.leading_monomial().unwrap())) {
        return Err(Error::Invariant(format!(
            "{regular} divides the lead of {}",
            data.format_polynomial(g)
        )));
    }
    let verdict = verify_gb(&ring, &kappa);
    if !verdict.ok {
        return Err(Error::Invariant("G together with L is not a Gröbner basis".into()));
    }

    let mut gens = kappa;
    gens.push(ring.monomial(1, t));
    let enlarged = buchberger(&ring, &gens, max_pairs)?;
    if !enlarged.certified {
        return Err(Error::Invariant("enlarged basis failed certification".into()));
    }

    let m = (data.n() - 1).div_ceil(s_last as u32) - 1;
    let witness = data.monomial(&[(ell, 1, m), (ell, s_last, 1)]);
    let w = ring.monomial(1, witness.clone());
    if ring.normal_form(&w, &enlarged.generators).is_zero() {
        return Err(Error::Invariant(format!(
            "witness {} lies in kappa + ({regular})",
            data.format_monomial(&witness)
        )));
    }
    for (idx, v) in data.vars().iter().enumerate() {
        let xw = ring.monomial(1, witness.mul(&Monomial::var(data.nvars(), idx)));
        if !ring.normal_form(&xw, &enlarged.generators).is_zero() {
            return Err(Error::Invariant(format!(
                "{v} times the witness {} survives",
                data.format_monomial(&witness)
            )));
        }
    }
    Ok(DepthCertificate { regular, witness, enlarged_basis: enlarged })
}
