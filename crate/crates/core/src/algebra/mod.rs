//! Exact polynomial arithmetic over a prime field with the revlex order.

pub mod field;
pub mod grading;
pub mod monomial;
pub mod polynomial;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use grading::{FineDegree, Grade};
pub use monomial::{compare_revlex, monomials_of_degree, Monomial};
pub use polynomial::{PolyRing, Polynomial, Reduction, Term};
