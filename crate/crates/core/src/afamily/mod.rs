//! The family `A_j^(q)(l; c, N)` from `exp(a J+^2) exp(b J-^2)`, `c = ab`.

mod construct;
mod difference;
mod dump;
mod functionals;
mod gf;
mod inverse;
mod params;

pub use construct::*;
pub use difference::*;
pub use dump::*;
pub use functionals::*;
pub use gf::*;
pub use inverse::*;
pub use params::*;
