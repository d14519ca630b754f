use std::cmp::Ordering;

use crate::algebra::field::PrimeField;
use crate::algebra::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// A polynomial over GF(p): nonzero terms in strictly descending revlex
/// order. The empty term list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }
}

/// Result of multivariate division: `f = sum quotients[i] * basis[i] + remainder`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Arithmetic context: the coefficient field and the number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    nvars: usize,
}

impl PolyRing {
    pub fn new(field: PrimeField, nvars: usize) -> Self {
        Self { field, nvars }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn one(&self) -> Polynomial {
        self.monomial(1, Monomial::one(self.nvars))
    }

    pub fn monomial(&self, coeff: u32, mono: Monomial) -> Polynomial {
        debug_assert_eq!(mono.nvars(), self.nvars);
        let coeff = coeff % self.field.characteristic();
        if coeff == 0 {
            return Polynomial::zero();
        }
        Polynomial { terms: vec![Term { coeff, mono }] }
    }

    /// Builds a polynomial from arbitrary signed terms: sorts, merges equal
    /// monomials and drops zero coefficients.
    pub fn from_terms<I>(&self, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(c, mono)| {
                debug_assert_eq!(mono.nvars(), self.nvars);
                Term { coeff: self.field.from_i64(c), mono }
            })
            .collect();
        raw.sort_by(|a, b| b.mono.cmp(&a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coeff != 0);
        Polynomial { terms }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, 1, &Monomial::one(self.nvars), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, self.field.neg(1), &Monomial::one(self.nvars), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term { coeff: self.field.mul(t.coeff, c), mono: t.mono.clone() })
                .collect(),
        }
    }

    /// `c * m * f`. Multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: u32, m: &Monomial, f: &Polynomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term { coeff: self.field.mul(t.coeff, c), mono: t.mono.mul(m) })
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &g.terms {
            acc = self.combine(&acc, t.coeff, &t.mono, f);
        }
        acc
    }

    /// Scales `f` so its leading coefficient is 1.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == 1 => f.clone(),
            Some(t) => self.scale(f, self.field.inv(t.coeff)),
        }
    }

    /// `f + c * m * g`, merged in one pass.
    fn combine(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g
            .terms
            .iter()
            .map(|t| Term { coeff: self.field.mul(t.coeff, c), mono: t.mono.mul(m) })
            .peekable();
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => a.mono.cmp(&b.mono),
            };
            match ord {
                Ordering::Greater => out.push(fi.next().unwrap().clone()),
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let a = fi.next().unwrap();
                    let b = gi.next().unwrap();
                    let s = self.field.add(a.coeff, b.coeff);
                    if s != 0 {
                        out.push(Term { coeff: s, mono: b.mono });
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    /// The S-polynomial `(L/lt f) f - (L/lt g) g` with `L = lcm(lm f, lm g)`,
    /// leading coefficients normalized to 1 before cancelling.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
            return Err(Error::Domain("S-polynomial of a zero polynomial".into()));
        };
        let lcm = tf.mono.lcm(&tg.mono);
        let mf = tf.mono.quotient_of(&lcm).expect("lcm is a multiple");
        let mg = tg.mono.quotient_of(&lcm).expect("lcm is a multiple");
        let a = self.mul_term(self.field.inv(tf.coeff), &mf, f);
        let b = self.mul_term(self.field.neg(self.field.inv(tg.coeff)), &mg, g);
        Ok(self.add(&a, &b))
    }

    /// Full multivariate division of `f` by `basis`. At each step the current
    /// leading term is divided by the first basis element (in list order)
    /// whose leading monomial divides it; otherwise it moves to the remainder.
    pub fn reduce(&self, f: &Polynomial, basis: &[Polynomial]) -> Reduction {
        let mut quotients: Vec<Vec<(i64, Monomial)>> = vec![Vec::new(); basis.len()];
        let remainder = self.divide(f, basis, |i, c, m| quotients[i].push((c as i64, m)));
        Reduction {
            remainder,
            quotients: quotients.into_iter().map(|q| self.from_terms(q)).collect(),
        }
    }

    /// Remainder of [`PolyRing::reduce`] without tracking quotients.
    pub fn normal_form(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        self.divide(f, basis, |_, _, _| {})
    }

    fn divide<F>(&self, f: &Polynomial, basis: &[Polynomial], mut record: F) -> Polynomial
    where
        F: FnMut(usize, u32, Monomial),
    {
        let inv_lc: Vec<u32> = basis
            .iter()
            .map(|g| {
                let t = g.leading_term().expect("division by a zero polynomial");
                self.field.inv(t.coeff)
            })
            .collect();
        let mut p = f.clone();
        let mut rem = Vec::new();
        while let Some(lt) = p.terms.first().cloned() {
            let hit = basis.iter().enumerate().find_map(|(i, g)| {
                g.leading_monomial().unwrap().quotient_of(&lt.mono).map(|q| (i, q))
            });
            match hit {
                Some((i, q)) => {
                    let c = self.field.mul(lt.coeff, inv_lc[i]);
                    p = self.combine(&p, self.field.neg(c), &q, &basis[i]);
                    record(i, c, q);
                }
                None => {
                    rem.push(lt);
                    p.terms.remove(0);
                }
            }
        }
        Polynomial { terms: rem }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(PrimeField::default(), n)
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn normalizes_terms() {
        let r = ring(2);
        let f = r.from_terms([(1, mono(&[0, 1])), (2, mono(&[1, 0])), (-1, mono(&[0, 1]))]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.leading_term().unwrap().coeff, 2);
        assert!(r.sub(&f, &f).is_zero());
    }

    #[test]
    fn s_polynomial_of_self_is_zero() {
        let r = ring(3);
        let f = r.from_terms([(1, mono(&[1, 1, 0])), (-1, mono(&[0, 0, 2]))]);
        assert!(r.s_polynomial(&f, &f).unwrap().is_zero());
        assert!(matches!(r.s_polynomial(&f, &Polynomial::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn product_is_commutative() {
        let r = ring(3);
        let f = r.from_terms([(1, mono(&[1, 0, 0])), (3, mono(&[0, 0, 1]))]);
        let g = r.from_terms([(2, mono(&[0, 1, 0])), (-1, mono(&[1, 0, 0]))]);
        assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
        assert_eq!(r.mul(&f, &g).len(), 4);
    }
}
