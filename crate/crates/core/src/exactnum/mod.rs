//! Exact scalars, polynomials and hypergeometric sums.

mod combinat;
mod functional;
mod hypergeom;
pub mod linalg;
mod rational;
mod separable;
mod upoly;

pub use combinat::{binomial, factorial, poch, pochhammer};
pub use functional::LinearFunctional;
pub use hypergeom::{hyp_terminating, hyp_terminating_naive, hyp_terminating_poly, HypParam};
pub use rational::{rat, Rational};
pub use separable::{check_s_separable, AffineForm, Separability};
pub use upoly::{UPoly, Variable};
