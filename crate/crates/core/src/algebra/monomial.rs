use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial of `S`, stored as a dense exponent vector indexed by the flat
/// variable index (`T_{1,1}` is index 0).
///
/// `Ord` is the degree reverse lexicographic order with `x_0 > x_1 > ...`.
/// Comparing monomials over different variable counts is a logic error; use
/// [`compare_revlex`] when the inputs are not known to agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * k).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Flat indices of the variables dividing this monomial, with multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().copied().enumerate().filter(|&(_, e)| e > 0)
    }

    fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        let d1 = self.total_degree();
        let d2 = other.total_degree();
        if d1 != d2 {
            return d1.cmp(&d2);
        }
        // Equal degree: m1 > m2 iff the right-most nonzero entry of m1 - m2 is negative.
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

/// Degree reverse lexicographic comparison that reports mismatched variable
/// universes instead of panicking.
pub fn compare_revlex(m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::Config(format!(
            "cannot compare monomials over {} and {} variables",
            m1.nvars(),
            m2.nvars()
        )));
    }
    Ok(m1.cmp_revlex(m2))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars()
            .cmp(&other.nvars())
            .then_with(|| self.cmp_revlex(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.support() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// revlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn fill(exps: &mut Vec<u32>, idx: usize, left: u32, out: &mut Vec<Monomial>) {
        if idx + 1 == exps.len() {
            exps[idx] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[idx] = e;
            fill(exps, idx + 1, left - e, out);
        }
        exps[idx] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(&mut vec![0; nvars], 0, d, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn revlex_rightmost_rule() {
        // sigma = (2,1): T11*T13 vs T12^2; difference (1,-2,1,0,0) has
        // right-most nonzero entry +1, so T11*T13 < T12^2.
        let a = m(&[1, 0, 1, 0, 0]);
        let b = m(&[0, 2, 0, 0, 0]);
        assert_eq!(compare_revlex(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(compare_revlex(&b, &a).unwrap(), Ordering::Greater);
        assert_eq!(compare_revlex(&a, &a).unwrap(), Ordering::Equal);
    }

    #[test]
    fn degree_dominates() {
        // T12*T21 (degree 2) vs T22 (degree 1)
        let a = m(&[0, 1, 0, 1, 0]);
        let b = m(&[0, 0, 0, 0, 1]);
        assert_eq!(compare_revlex(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn variables_descend() {
        for i in 0..4 {
            assert!(Monomial::var(5, i) > Monomial::var(5, i + 1));
        }
    }

    #[test]
    fn mismatched_universe() {
        assert!(matches!(
            compare_revlex(&Monomial::one(3), &Monomial::one(4)),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 2])));
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn degree_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(monomials_of_degree(5, 3).len(), 35);
    }
}
