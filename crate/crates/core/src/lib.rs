//! Exact construction and verification of the d-orthogonal polynomial
//! families carried by the exponential operators `exp(a J+^2) exp(b J-^2)`
//! and `exp(a J+) exp(b J-^M)` on finite su(2) irreps, together with their
//! contraction limits.

pub mod afamily;
pub mod bfamily;
pub mod cli;
pub mod dortho;
pub mod error;
pub mod exactnum;
pub mod limits;
pub mod su2rep;

pub use error::{Error, Result};
