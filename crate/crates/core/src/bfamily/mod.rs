//! The family `B_n(k; f, N)` from `exp(a J+) exp(b J-^M)`, `f = a^M b`,
//! `d = 2M - 1`.

mod construct;
mod difference;
mod dump;
mod functionals;
mod gf;
mod inverse;
mod krawtchouk;
mod params;

pub use construct::*;
pub use difference::*;
pub use dump::*;
pub use functionals::*;
pub use gf::*;
pub use inverse::*;
pub use krawtchouk::*;
pub use params::*;
