//! Symbolic powers of the divisorial ideal `K` on a rational normal scroll:
//! minimal generators, Gröbner bases of their preimages, rank/shift data of
//! an explicit resolution, a Koszul-homology Betti oracle and the symbolic
//! Rees algebra.
//!
//! ```
//! use scrolldiv::{symbolic, ScrollData};
//!
//! let data = ScrollData::new(vec![2, 1], 3, 32003).unwrap();
//! let gens = symbolic::generating_set_l(&data);
//! assert_eq!(gens.len(), 4);
//! ```

pub mod algebra;
pub mod betti;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod rees;
pub mod resolution;
pub mod scroll;
pub mod symbolic;

pub use error::{Error, Result};
pub use scroll::{ScrollData, ScrollMatrix, VarId};
