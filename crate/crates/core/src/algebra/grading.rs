use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// The fine degree `(alpha, beta; e)`: the exponents of `x`, `y` and
/// `t_1..t_l` in the image of a monomial under the embedding into
/// `k[x, y, t_1, ..., t_l]`.
///
/// Shifts of free modules are fine degrees as well and may have negative
/// `alpha` or `beta`, so the components are signed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FineDegree {
    pub alpha: i64,
    pub beta: i64,
    pub e: Vec<i64>,
}

impl FineDegree {
    pub fn zero(ell: usize) -> Self {
        Self { alpha: 0, beta: 0, e: vec![0; ell] }
    }

    pub fn new(alpha: i64, beta: i64, e: Vec<i64>) -> Self {
        Self { alpha, beta, e }
    }

    /// Total degree, `|e|_1`.
    pub fn total(&self) -> i64 {
        self.e.iter().sum()
    }

    /// The `Deg` grading is the `x`-exponent.
    pub fn deg(&self) -> i64 {
        self.alpha
    }

    pub fn add(&self, other: &FineDegree) -> FineDegree {
        FineDegree {
            alpha: self.alpha + other.alpha,
            beta: self.beta + other.beta,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &FineDegree) -> FineDegree {
        FineDegree {
            alpha: self.alpha - other.alpha,
            beta: self.beta - other.beta,
            e: self.e.iter().zip(&other.e).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> FineDegree {
        FineDegree {
            alpha: self.alpha * k,
            beta: self.beta * k,
            e: self.e.iter().map(|a| a * k).collect(),
        }
    }

    /// Componentwise `<=`: divisibility of the corresponding monomials of
    /// `k[x, y, t]`.
    pub fn divides(&self, other: &FineDegree) -> bool {
        self.alpha <= other.alpha
            && self.beta <= other.beta
            && self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.alpha >= 0 && self.beta >= 0 && self.e.iter().all(|&x| x >= 0)
    }

    /// Whether `x^alpha y^beta t^e` lies in the image of `S`: all exponents
    /// non-negative and `alpha + beta = sigma . e`.
    pub fn is_scroll_degree(&self, sigma: &[u32]) -> bool {
        self.is_nonnegative() && self.alpha + self.beta == dot(sigma, &self.e)
    }
}

pub(crate) fn dot(sigma: &[u32], e: &[i64]) -> i64 {
    sigma.iter().zip(e).map(|(&s, &x)| s as i64 * x).sum()
}

/// Sorted on (total degree, alpha, e, beta).
impl Ord for FineDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.e.cmp(&other.e))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for FineDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FineDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};", self.alpha, self.beta)?;
        for (i, x) in self.e.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FineDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The three gradings of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grade {
    pub deg: i64,
    pub total: i64,
    pub fdeg: FineDegree,
}
