//! Classical target polynomials and the large-`N` contraction experiments.

mod charlier;
mod classical;
mod gf;
mod meixner;
mod report;

pub use charlier::*;
pub use classical::*;
pub use gf::*;
pub use meixner::*;
pub use report::{fitted_order, ContractionReport};
