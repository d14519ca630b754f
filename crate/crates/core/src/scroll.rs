//! Scroll data: the variables `T_{i,j}`, the catalecticant matrix `psi`, its
//! 2x2 minors (the ideal `H`), the generators of `K`, and the monomial
//! embedding into `k[x, y, t_1, ..., t_l]`.

use std::fmt;

use serde::Serialize;

use crate::algebra::grading::dot;
use crate::algebra::{FineDegree, Grade, Monomial, PolyRing, Polynomial, PrimeField};
use crate::error::{Error, Result};

/// A variable `T_{block,slot}`, both indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VarId {
    pub block: usize,
    pub slot: usize,
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{},{}", self.block, self.slot)
    }
}

/// Block widths `sigma_1 >= ... >= sigma_l >= 1`, the power `n >= 2`, and
/// the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrollData {
    sigma: Vec<u32>,
    n: u32,
    field: PrimeField,
    /// Flat index of `T_{i,1}` for each block.
    offsets: Vec<usize>,
    vars: Vec<VarId>,
}

impl ScrollData {
    pub fn new(sigma: Vec<u32>, n: u32, prime: u32) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::Config("sigma must have at least one entry".into()));
        }
        if sigma.contains(&0) {
            return Err(Error::Config(format!("sigma entries must be positive: {sigma:?}")));
        }
        if sigma.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Config(format!("sigma must be weakly decreasing: {sigma:?}")));
        }
        if n < 2 {
            return Err(Error::Config(format!(
                "n = {n}: the power must satisfy n >= 2 (the standing hypothesis on the data)"
            )));
        }
        let field = PrimeField::new(prime)?;
        let mut offsets = Vec::with_capacity(sigma.len());
        let mut vars = Vec::new();
        for (i, &s) in sigma.iter().enumerate() {
            offsets.push(vars.len());
            for j in 1..=s as usize + 1 {
                vars.push(VarId { block: i + 1, slot: j });
            }
        }
        Ok(Self { sigma, n, field, offsets, vars })
    }

    /// Same block widths and field, different power.
    pub fn with_power(&self, n: u32) -> Result<Self> {
        Self::new(self.sigma.clone(), n, self.field.characteristic())
    }

    /// Same block widths and power, different field.
    pub fn with_prime(&self, prime: u32) -> Result<Self> {
        Self::new(self.sigma.clone(), self.n, prime)
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    /// `sigma_i`, 1-based.
    pub fn sigma_at(&self, block: usize) -> u32 {
        self.sigma[block - 1]
    }

    pub fn ell(&self) -> usize {
        self.sigma.len()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn prime(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of variables of `S`, `sum (sigma_i + 1)`.
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Sum of the block widths (number of columns of `psi`).
    pub fn sigma_sum(&self) -> u32 {
        self.sigma.iter().sum()
    }

    pub fn ring(&self) -> PolyRing {
        PolyRing::new(self.field, self.nvars())
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn var_id(&self, index: usize) -> VarId {
        self.vars[index]
    }

    pub fn check_var(&self, v: VarId) -> Result<()> {
        if v.block == 0 || v.block > self.ell() || v.slot == 0 || v.slot > self.sigma_at(v.block) as usize + 1 {
            return Err(Error::Config(format!("{v} is not a variable for sigma = {:?}", self.sigma)));
        }
        Ok(())
    }

    /// Flat index of `T_{block,slot}`; `T_{1,1}` is 0.
    pub fn flat(&self, v: VarId) -> usize {
        debug_assert!(self.check_var(v).is_ok(), "{v}");
        self.offsets[v.block - 1] + v.slot - 1
    }

    pub fn var(&self, block: usize, slot: usize) -> Monomial {
        Monomial::var(self.nvars(), self.flat(VarId { block, slot }))
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// `prod T_{block,slot}^exp`.
    pub fn monomial(&self, factors: &[(usize, usize, u32)]) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        for &(b, s, e) in factors {
            exps[self.flat(VarId { block: b, slot: s })] += e;
        }
        Monomial::from_exponents(exps)
    }

    /// `Deg T_{i,j} = sigma_i + 1 - j`.
    pub fn var_deg(&self, v: VarId) -> i64 {
        self.sigma_at(v.block) as i64 + 1 - v.slot as i64
    }

    /// `fdeg T_{i,j} = (sigma_i - j + 1, j - 1; e_i)`.
    pub fn var_fdeg(&self, v: VarId) -> FineDegree {
        let mut e = vec![0; self.ell()];
        e[v.block - 1] = 1;
        FineDegree::new(self.var_deg(v), v.slot as i64 - 1, e)
    }

    pub fn grade(&self, m: &Monomial) -> Grade {
        let fdeg = self.pi_image(m);
        Grade { deg: fdeg.alpha, total: fdeg.total(), fdeg }
    }

    pub fn deg(&self, m: &Monomial) -> i64 {
        m.support().map(|(i, e)| e as i64 * self.var_deg(self.vars[i])).sum()
    }

    /// Exponent triple of `pi(m)` in `k[x, y, t]`; this is `fdeg(m)`.
    pub fn pi_image(&self, m: &Monomial) -> FineDegree {
        let mut out = FineDegree::zero(self.ell());
        for (i, e) in m.support() {
            let v = self.vars[i];
            let e = e as i64;
            out.alpha += e * self.var_deg(v);
            out.beta += e * (v.slot as i64 - 1);
            out.e[v.block - 1] += e;
        }
        out
    }

    /// `sigma . e`.
    pub fn sigma_dot(&self, e: &[i64]) -> i64 {
        dot(&self.sigma, e)
    }

    /// Render a monomial as `T1,1^2*T2,1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.support()
            .map(|(i, e)| {
                let v = self.vars[i];
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_polynomial(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let p = self.prime();
        let mut out = String::new();
        for (k, t) in f.terms().iter().enumerate() {
            let (neg, mag) = if t.coeff > p / 2 { (true, p - t.coeff) } else { (false, t.coeff) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != 1 || t.mono.is_one() {
                out.push_str(&mag.to_string());
                if !t.mono.is_one() {
                    out.push('*');
                }
            }
            if !t.mono.is_one() {
                out.push_str(&self.format_monomial(&t.mono));
            }
        }
        out
    }
}

/// The matrix `psi = [psi_1 | ... | psi_l]`; block `u` has columns
/// `(T_{u,c}, T_{u,c+1})` for `1 <= c <= sigma_u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrollMatrix {
    pub blocks: Vec<Vec<[VarId; 2]>>,
}

impl ScrollMatrix {
    pub fn columns(&self) -> impl Iterator<Item = &[VarId; 2]> {
        self.blocks.iter().flatten()
    }

    pub fn ncols(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn top_row(&self) -> impl Iterator<Item = VarId> + '_ {
        self.columns().map(|c| c[0])
    }
}

pub fn build_psi(data: &ScrollData) -> ScrollMatrix {
    let blocks = data
        .sigma()
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            (1..=s as usize)
                .map(|c| [VarId { block: i + 1, slot: c }, VarId { block: i + 1, slot: c + 1 }])
                .collect()
        })
        .collect();
    ScrollMatrix { blocks }
}

/// The signed 2x2 minors of `psi`, one per ordered column pair. The minor on
/// columns with top entries `T_i, T_j` (flat, `i < j`) is
/// `T_{i+1} T_j - T_i T_{j+1}`, whose leading term is `T_{i+1} T_j`.
pub fn minors_h(data: &ScrollData, psi: &ScrollMatrix) -> Vec<Polynomial> {
    let ring = data.ring();
    let cols: Vec<_> = psi.columns().collect();
    let mut out = Vec::new();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            let [ti, ti1] = *cols[a];
            let [tj, tj1] = *cols[b];
            let lead = data.var(ti1.block, ti1.slot).mul(&data.var(tj.block, tj.slot));
            let tail = data.var(ti.block, ti.slot).mul(&data.var(tj1.block, tj1.slot));
            let f = ring.from_terms([(1, lead), (-1, tail)]);
            debug_assert!(f.leading_term().map(|t| t.coeff) == Some(1));
            out.push(f);
        }
    }
    out
}

/// The entries of the top row of `psi`, generators of `K`.
pub fn k_generators(data: &ScrollData) -> Vec<Monomial> {
    build_psi(data).top_row().map(|v| data.var(v.block, v.slot)).collect()
}

/// All `(alpha, beta; e)` with `|e| = total_degree` and
/// `alpha + beta = sigma . e`: a basis of `A` in that total degree, one
/// element per fine degree. Ordered by `e` descending, then `alpha` descending.
pub fn a_monomial_basis(data: &ScrollData, total_degree: u32) -> Vec<FineDegree> {
    let mut out = Vec::new();
    for e in compositions(total_degree as i64, data.ell()) {
        let s = data.sigma_dot(&e);
        for alpha in (0..=s).rev() {
            out.push(FineDegree::new(alpha, s - alpha, e.clone()));
        }
    }
    out
}

/// All vectors of `parts` non-negative integers summing to `total`, in
/// lexicographically descending order.
pub fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn go(total: i64, parts: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(sigma: &[u32]) -> ScrollData {
        ScrollData::new(sigma.to_vec(), 2, 32003).unwrap()
    }

    #[test]
    fn rejects_bad_configurations() {
        assert!(matches!(ScrollData::new(vec![1, 2], 2, 32003), Err(Error::Config(_))));
        assert!(matches!(ScrollData::new(vec![2, 1], 1, 32003), Err(Error::Config(_))));
        assert!(matches!(ScrollData::new(vec![], 2, 32003), Err(Error::Config(_))));
        assert!(matches!(ScrollData::new(vec![2, 0], 2, 32003), Err(Error::Config(_))));
        assert!(matches!(ScrollData::new(vec![2, 1], 2, 32004), Err(Error::Config(_))));
    }

    #[test]
    fn flat_index_round_trip() {
        let d = data(&[3, 2, 1]);
        assert_eq!(d.nvars(), 9);
        for (i, &v) in d.vars().iter().enumerate() {
            assert_eq!(d.flat(v), i);
        }
        assert_eq!(d.flat(VarId { block: 2, slot: 1 }), 4);
        assert!(d.check_var(VarId { block: 3, slot: 3 }).is_err());
    }

    #[test]
    fn psi_shapes() {
        let p = build_psi(&data(&[2, 1]));
        let v = |b, s| VarId { block: b, slot: s };
        assert_eq!(p.blocks, vec![vec![[v(1, 1), v(1, 2)], [v(1, 2), v(1, 3)]], vec![[v(2, 1), v(2, 2)]]]);
        assert_eq!(build_psi(&data(&[1])).blocks, vec![vec![[v(1, 1), v(1, 2)]]]);
        let widths: Vec<usize> = build_psi(&data(&[3, 2, 1])).blocks.iter().map(Vec::len).collect();
        assert_eq!(widths, vec![3, 2, 1]);
    }

    #[test]
    fn minors_sigma_21() {
        let d = data(&[2, 1]);
        let g = minors_h(&d, &build_psi(&d));
        let shown: Vec<String> = g.iter().map(|f| d.format_polynomial(f)).collect();
        assert_eq!(
            shown,
            vec!["T1,2^2 - T1,1*T1,3", "T1,2*T2,1 - T1,1*T2,2", "T1,3*T2,1 - T1,2*T2,2"]
        );
    }

    #[test]
    fn minor_counts() {
        let d = data(&[1, 1]);
        let g = minors_h(&d, &build_psi(&d));
        assert_eq!(g.len(), 1);
        assert_eq!(d.format_polynomial(&g[0]), "T1,2*T2,1 - T1,1*T2,2");
        let d = data(&[1]);
        assert!(minors_h(&d, &build_psi(&d)).is_empty());
        let d = data(&[3, 2, 1]);
        assert_eq!(minors_h(&d, &build_psi(&d)).len(), 15);
    }

    #[test]
    fn minors_vanish_under_pi() {
        for sigma in [vec![2, 1], vec![3, 2, 1], vec![2, 2]] {
            let d = data(&sigma);
            for f in minors_h(&d, &build_psi(&d)) {
                let imgs: Vec<_> = f.monomials().map(|m| d.pi_image(m)).collect();
                assert_eq!(imgs[0], imgs[1]);
            }
        }
    }

    #[test]
    fn k_generator_lists() {
        let names = |s: &[u32]| {
            let d = data(s);
            k_generators(&d).iter().map(|m| d.format_monomial(m)).collect::<Vec<_>>()
        };
        assert_eq!(names(&[2, 1]), vec!["T1,1", "T1,2", "T2,1"]);
        assert_eq!(names(&[1, 1]), vec!["T1,1", "T2,1"]);
        assert_eq!(names(&[3]), vec!["T1,1", "T1,2", "T1,3"]);
    }

    #[test]
    fn grades() {
        let d = data(&[2, 1]);
        let g = d.grade(&d.var(1, 2));
        assert_eq!((g.deg, g.total), (1, 1));
        assert_eq!(g.fdeg, FineDegree::new(1, 1, vec![1, 0]));
        let g = d.grade(&d.one());
        assert_eq!((g.deg, g.total, g.fdeg), (0, 0, FineDegree::zero(2)));
        let g = d.grade(&d.monomial(&[(1, 1, 1), (2, 2, 1)]));
        assert_eq!((g.deg, g.total), (2, 2));
        assert_eq!(g.fdeg, FineDegree::new(2, 1, vec![1, 1]));
    }

    #[test]
    fn pi_images() {
        let d = data(&[2, 1]);
        assert_eq!(d.pi_image(&d.var(1, 2)), FineDegree::new(1, 1, vec![1, 0]));
        let a = d.monomial(&[(1, 2, 1), (2, 1, 1)]);
        let b = d.monomial(&[(1, 1, 1), (2, 2, 1)]);
        assert_eq!(d.pi_image(&a), d.pi_image(&b));
        assert_eq!(d.pi_image(&a), FineDegree::new(2, 1, vec![1, 1]));
        assert_eq!(d.pi_image(&d.one()), FineDegree::zero(2));
    }

    #[test]
    fn a_basis_counts() {
        let d = data(&[2, 1]);
        assert_eq!(a_monomial_basis(&d, 1).len(), 5);
        assert_eq!(a_monomial_basis(&d, 2).len(), 12);
        assert_eq!(a_monomial_basis(&d, 0).len(), 1);
        assert_eq!(a_monomial_basis(&data(&[3, 2, 1]), 0), vec![FineDegree::zero(3)]);
        for f in a_monomial_basis(&d, 3) {
            assert!(f.is_scroll_degree(d.sigma()));
        }
    }
}
