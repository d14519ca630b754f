//! Eligible tuples, the minimal generating set of `K^(n)`, canonical forms
//! modulo `H`, and membership in `K^(n) = A_{>=n}`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::algebra::{FineDegree, Monomial};
use crate::error::{Error, Result};
use crate::scroll::{ScrollData, VarId};

/// An eligible `k`-tuple `a` (`k < l`, `sum a_u sigma_u < n`) with its
/// cached `f(a)` and `r(a)`.
///
/// `Ord` is the total order in which `a > b` when, after padding both
/// tuples on the right with `+infinity`, `a` is lexicographically larger.
/// The empty tuple is the maximum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EligibleTuple {
    pub a: Vec<u32>,
    pub f: u32,
    pub r: u32,
}

impl EligibleTuple {
    pub fn new(data: &ScrollData, a: Vec<u32>) -> Result<Self> {
        let k = a.len();
        if k >= data.ell() {
            return Err(Error::Domain(format!(
                "a {k}-tuple cannot be eligible when l = {}",
                data.ell()
            )));
        }
        let weight = weighted_sum(data, &a);
        let n = data.n() as u64;
        if weight >= n {
            return Err(Error::Domain(format!("{a:?} is not eligible: weight {weight} >= n = {n}")));
        }
        let next = data.sigma()[k] as u64;
        // largest f with weight + f*next < n
        let f = (n - 1 - weight) / next;
        let r = weight + (f + 1) * next - n + 1;
        debug_assert!(1 <= r && r <= next);
        Ok(Self { a, f: f as u32, r: r as u32 })
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// `sum_u a_u e_u` padded to length `l`.
    pub fn multi_shift(&self, ell: usize) -> Vec<i64> {
        let mut e = vec![0; ell];
        for (u, &x) in self.a.iter().enumerate() {
            e[u] = x as i64;
        }
        e
    }

    /// `T^a T_{k+1,1}^{f(a)}`, the common factor of this tuple's generators.
    pub fn head(&self, data: &ScrollData) -> Monomial {
        let mut factors: Vec<(usize, usize, u32)> =
            self.a.iter().enumerate().map(|(u, &x)| (u + 1, 1, x)).collect();
        factors.push((self.k() + 1, 1, self.f));
        data.monomial(&factors)
    }
}

fn weighted_sum(data: &ScrollData, a: &[u32]) -> u64 {
    a.iter().zip(data.sigma()).map(|(&x, &s)| x as u64 * s as u64).sum()
}

impl Ord for EligibleTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.a.len().max(other.a.len());
        for i in 0..len {
            // None plays the role of +infinity.
            let x = self.a.get(i);
            let y = other.a.get(i);
            let ord = match (x, y) {
                (Some(x), Some(y)) => x.cmp(y),
                (None, Some(_)) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (None, None) => Ordering::Equal,
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for EligibleTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EligibleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All eligible tuples, sorted descending (the empty tuple first, the zero
/// `(l-1)`-tuple last).
pub fn enumerate_eligible(data: &ScrollData) -> Vec<EligibleTuple> {
    fn extend(data: &ScrollData, prefix: &mut Vec<u32>, weight: u64, out: &mut Vec<EligibleTuple>) {
        out.push(EligibleTuple::new(data, prefix.clone()).expect("prefix is eligible"));
        let k = prefix.len();
        if k + 1 >= data.ell() {
            return;
        }
        let s = data.sigma()[k] as u64;
        let mut x = 0u64;
        while weight + x * s < data.n() as u64 {
            prefix.push(x as u32);
            extend(data, prefix, weight + x * s, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    extend(data, &mut Vec::new(), 0, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `N(a) = (a, f(a))`, the immediate successor of `a` in the descending
/// enumeration.
pub fn neighbor(data: &ScrollData, a: &EligibleTuple) -> Result<EligibleTuple> {
    if a.k() + 1 >= data.ell() {
        return Err(Error::Domain(format!(
            "N({a}) is undefined: the tuple already has length l - 1 = {}",
            data.ell() - 1
        )));
    }
    let mut next = a.a.clone();
    next.push(a.f);
    EligibleTuple::new(data, next)
}

/// One element `T^a T_{k+1,1}^{f(a)} T_{k+1,slot}` of the generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LElement {
    pub tuple: EligibleTuple,
    pub slot: u32,
    pub monomial: Monomial,
}

impl LElement {
    pub fn var(&self) -> VarId {
        VarId { block: self.tuple.k() + 1, slot: self.slot as usize }
    }
}

/// The minimal generating set of `K^(n)` with the eligible tuple behind
/// each element; ordered by tuple (descending), then slot.
pub fn generating_set_with_tuples(data: &ScrollData) -> Vec<LElement> {
    let mut out = Vec::new();
    for tuple in enumerate_eligible(data) {
        let head = tuple.head(data);
        for slot in 1..=tuple.r {
            let monomial = head.mul(&data.var(tuple.k() + 1, slot as usize));
            out.push(LElement { tuple: tuple.clone(), slot, monomial });
        }
    }
    out
}

pub fn generating_set_l(data: &ScrollData) -> Vec<Monomial> {
    generating_set_with_tuples(data).into_iter().map(|e| e.monomial).collect()
}

/// Checks that no `pi`-image of an element divides the image of a distinct
/// element. Returns the first offending pair `(divisor, multiple)` by index.
pub fn check_minimality(data: &ScrollData, elements: &[Monomial]) -> Option<(usize, usize)> {
    let images: Vec<FineDegree> = elements.iter().map(|m| data.pi_image(m)).collect();
    for (i, a) in images.iter().enumerate() {
        for (j, b) in images.iter().enumerate() {
            if i != j && a.divides(b) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Rewrites `m` modulo `H` into the shape
/// `T_{1,1}^{a_1}...T_{k,1}^{a_k} T_{k,v} T_{k,sigma_k+1}^{b_k}...T_{l,sigma_l+1}^{b_l}`.
///
/// Split `m = f1 * mid * f2`, where `f1` is the longest product of
/// first-slot variables from the left and `f2` the longest product of
/// last-slot variables from the right. While `mid` has degree at least two,
/// replace its largest variable `T_{i,j}` and smallest variable `T_{u,v}` by
/// `T_{i,j-1} T_{u,v+1}`.
pub fn canonical_form(data: &ScrollData, m: &Monomial) -> Result<Monomial> {
    if data.deg(m) <= 0 {
        return Err(Error::Domain(format!(
            "{} has Deg 0; no canonical form",
            data.format_monomial(m)
        )));
    }
    let mut exps = m.exponents().to_vec();
    // Each step moves one unit of exponent strictly left and one strictly
    // right inside a bounded window, so this is far more than enough.
    let cap = 1 + 4 * (m.total_degree() as usize + 1).pow(2) * data.nvars().pow(2);
    for _ in 0..cap {
        let (lo, hi) = middle_window(data, &exps);
        let mid: Vec<usize> = (lo..hi).filter(|&i| exps[i] > 0).collect();
        let degree: u32 = mid.iter().map(|&i| exps[i]).sum();
        if degree <= 1 {
            return Ok(Monomial::from_exponents(exps));
        }
        let big = data.var_id(mid[0]);
        let small = data.var_id(*mid.last().unwrap());
        if big.slot == 1 || small.slot == data.sigma_at(small.block) as usize + 1 {
            return Err(Error::Invariant(format!(
                "rewriting of {} reached an unexpected middle factor",
                data.format_monomial(m)
            )));
        }
        exps[data.flat(big)] -= 1;
        exps[data.flat(small)] -= 1;
        exps[data.flat(VarId { slot: big.slot - 1, ..big })] += 1;
        exps[data.flat(VarId { slot: small.slot + 1, ..small })] += 1;
    }
    Err(Error::Invariant(format!(
        "rewriting of {} did not terminate",
        data.format_monomial(m)
    )))
}

/// Flat index window `[lo, hi)` of the middle factor.
fn middle_window(data: &ScrollData, exps: &[u32]) -> (usize, usize) {
    let block_range = |b: usize| {
        let start = data.flat(VarId { block: b, slot: 1 });
        start..start + data.sigma_at(b) as usize + 1
    };
    let mut lo = data.nvars();
    for b in 1..=data.ell() {
        let r = block_range(b);
        if exps[r.start + 1..r.end].iter().any(|&e| e > 0) {
            lo = r.start + 1;
            break;
        }
    }
    let mut hi = 0;
    for b in (1..=data.ell()).rev() {
        let r = block_range(b);
        if exps[r.start..r.end - 1].iter().any(|&e| e > 0) {
            hi = r.end - 1;
            break;
        }
    }
    (lo, hi.max(lo))
}

/// Whether `m` already has the canonical shape for some block `k`.
pub fn is_canonical_shape(data: &ScrollData, m: &Monomial) -> bool {
    let e = |b: usize, s: usize| m.exponent(data.flat(VarId { block: b, slot: s }));
    (1..=data.ell()).any(|k| {
        let before = (1..k).all(|b| (2..=data.sigma_at(b) as usize + 1).all(|s| e(b, s) == 0));
        let after = (k + 1..=data.ell()).all(|b| (1..=data.sigma_at(b) as usize).all(|s| e(b, s) == 0));
        let sk = data.sigma_at(k) as usize;
        let inner: u32 = (2..=sk).map(|s| e(k, s)).sum();
        let own = inner == 1 || (inner == 0 && e(k, 1) > 0);
        before && after && own
    })
}

/// Membership of the image of `m` in `K^(n) = A_{>=n}`.
pub fn in_symbolic_power(data: &ScrollData, m: &Monomial) -> bool {
    data.deg(m) >= data.n() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(sigma: &[u32], n: u32) -> ScrollData {
        ScrollData::new(sigma.to_vec(), n, 32003).unwrap()
    }

    fn tuple_list(d: &ScrollData) -> Vec<(Vec<u32>, u32, u32)> {
        enumerate_eligible(d).into_iter().map(|t| (t.a, t.f, t.r)).collect()
    }

    #[test]
    fn eligible_sigma_21_n3() {
        assert_eq!(
            tuple_list(&data(&[2, 1], 3)),
            vec![(vec![], 1, 2), (vec![1], 0, 1), (vec![0], 2, 1)]
        );
    }

    #[test]
    fn eligible_sigma_321_n4() {
        let got: Vec<Vec<u32>> = tuple_list(&data(&[3, 2, 1], 4)).into_iter().map(|t| t.0).collect();
        assert_eq!(got, vec![vec![], vec![1], vec![1, 0], vec![0], vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn eligible_single_block() {
        let d = data(&[3], 5);
        let ts = enumerate_eligible(&d);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].a.is_empty());
        // f = ceil(5/3) - 1 = 1, r = 3*2 - 5 + 1 = 2
        assert_eq!((ts[0].f, ts[0].r), (1, 2));
    }

    #[test]
    fn ineligible_tuples_rejected() {
        let d = data(&[2, 1], 3);
        assert!(EligibleTuple::new(&d, vec![2]).is_err());
        assert!(EligibleTuple::new(&d, vec![0, 0]).is_err());
    }

    #[test]
    fn neighbors() {
        let d = data(&[2, 1], 2);
        let empty = EligibleTuple::new(&d, vec![]).unwrap();
        assert_eq!(empty.f, 0);
        assert_eq!(neighbor(&d, &empty).unwrap().a, vec![0]);

        let d = data(&[2, 1], 3);
        let empty = EligibleTuple::new(&d, vec![]).unwrap();
        assert_eq!((empty.f, empty.r), (1, 2));
        let nb = neighbor(&d, &empty).unwrap();
        assert_eq!((nb.a.clone(), nb.f, nb.r), (vec![1], 0, 1));
        assert!(matches!(neighbor(&d, &nb), Err(Error::Domain(_))));
    }

    fn l_names(sigma: &[u32], n: u32) -> Vec<String> {
        let d = data(sigma, n);
        generating_set_l(&d).iter().map(|m| d.format_monomial(m)).collect()
    }

    #[test]
    fn generating_sets() {
        assert_eq!(l_names(&[2, 1], 2), vec!["T1,1", "T2,1^2"]);
        assert_eq!(l_names(&[2, 1], 3), vec!["T1,1^2", "T1,1*T1,2", "T1,1*T2,1", "T2,1^3"]);
        assert_eq!(
            l_names(&[3, 2, 1], 4),
            vec![
                "T1,1^2",
                "T1,1*T1,2",
                "T1,1*T1,3",
                "T1,1*T2,1",
                "T1,1*T2,2",
                "T1,1*T3,1",
                "T2,1^2",
                "T2,1*T3,1^2",
                "T3,1^4"
            ]
        );
        assert_eq!(l_names(&[3], 2), vec!["T1,1", "T1,2"]);
    }

    #[test]
    fn minimality_checks() {
        let d = data(&[2, 1], 3);
        assert_eq!(check_minimality(&d, &generating_set_l(&d)), None);
        let t11 = d.var(1, 1);
        assert_eq!(check_minimality(&d, &[t11.clone(), t11.pow(2)]), Some((0, 1)));
        assert_eq!(check_minimality(&d, &[t11]), None);
    }

    #[test]
    fn canonical_forms() {
        let d = data(&[2, 1], 2);
        let name = |m: &Monomial| d.format_monomial(m);
        let m = d.monomial(&[(1, 2, 1), (2, 1, 1)]);
        assert_eq!(name(&canonical_form(&d, &m).unwrap()), "T1,1*T2,2");
        let m = d.monomial(&[(1, 1, 1), (2, 2, 1)]);
        assert_eq!(canonical_form(&d, &m).unwrap(), m);
        let m = d.monomial(&[(1, 2, 2)]);
        assert_eq!(name(&canonical_form(&d, &m).unwrap()), "T1,1*T1,3");
        assert!(matches!(canonical_form(&d, &d.var(1, 3)), Err(Error::Domain(_))));
    }

    #[test]
    fn membership() {
        let d = data(&[2, 1], 2);
        assert!(in_symbolic_power(&d, &d.monomial(&[(1, 2, 1), (2, 1, 1)])));
        for k in 0..6 {
            assert!(!in_symbolic_power(&d, &d.monomial(&[(1, 3, k)])));
        }
        assert!(!in_symbolic_power(&d, &d.var(2, 1)));
    }

    #[test]
    fn shape_predicate() {
        let d = data(&[2, 2], 2);
        assert!(is_canonical_shape(&d, &d.monomial(&[(1, 1, 1), (2, 3, 1)])));
        assert!(is_canonical_shape(&d, &d.monomial(&[(1, 1, 2), (1, 2, 1), (1, 3, 1), (2, 3, 1)])));
        assert!(!is_canonical_shape(&d, &d.monomial(&[(1, 2, 1), (2, 1, 1)])));
    }
}
