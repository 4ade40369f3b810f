//! Difference equation and forward shift of the A family, checked as
//! polynomial identities in `l` after clearing the `(l+1)` denominator of
//! `Omega_l = (2l+q+1)_2 (2l+q-N)_2 / (l+1)`.

use super::{a_poly_recurrence, xi_poly, FamilyParamsA};
use crate::dortho::PolyIdentity;
use crate::error::{Error, Result};
use crate::exactnum::{poch, Rational, UPoly, Variable};

fn ell() -> UPoly {
    UPoly::x().with_var(Variable::Ell)
}

/// `(l+1) Omega_l = (2l+q+1)_2 (2l+q-N)_2`.
pub fn omega_numerator(q: usize, big_n: usize) -> UPoly {
    let a = UPoly::linear(Rational::integer(2), Rational::from(q + 1)).pochhammer(2);
    let b = UPoly::linear(Rational::integer(2), Rational::integer(q as i64 - big_n as i64)).pochhammer(2);
    (&a * &b).with_var(Variable::Ell)
}

/// `sum_t (-l)_t xi_t(2l+q, N) A(l-t)`.
fn xi_sum(q: usize, big_n: usize, a: &UPoly) -> UPoly {
    let k = UPoly::linear(Rational::integer(2), Rational::from(q));
    let minus_l = UPoly::linear(Rational::integer(-1), Rational::zero());
    let mut acc = UPoly::zero();
    for t in 0..4 {
        let term = &(&minus_l.pochhammer(t) * &xi_poly(t, &k, big_n)) * &a.shift_i64(-(t as i64));
        acc = &acc + &term;
    }
    acc
}

/// `(l+1)(j-l) A_j(l) = c Omega_num A_j(l+1) - (l+1) l A_j(l-1)
///                      - (l+1) c sum_t (-l)_t xi_t(2l+q,N) A_j(l-t)`.
pub fn a_difference_apply(params: &FamilyParamsA, j: usize) -> Result<PolyIdentity> {
    params.check_index(j)?;
    let polys = a_poly_recurrence(params, j)?;
    let a = &polys[j];
    a_difference_identity(params, j, a).into_result()
}

/// Builds both sides of the difference equation for an arbitrary polynomial
/// `a` claimed to be `A_j`.
pub fn a_difference_identity(params: &FamilyParamsA, j: usize, a: &UPoly) -> PolyIdentity {
    let c = &params.c;
    let l1 = UPoly::linear(Rational::one(), Rational::one());
    let lhs = &(&l1 * &UPoly::linear(Rational::integer(-1), Rational::from(j))) * a;
    let first = (&omega_numerator(params.q, params.n) * &a.shift_i64(1)).scale(c);
    let second = &(&l1 * &ell()) * &a.shift_i64(-1);
    let third = (&l1 * &xi_sum(params.q, params.n, a)).scale(c);
    let rhs = &(&first - &second) - &third;
    PolyIdentity {
        name: format!("A difference equation, q={} N={} j={j}", params.q, params.n),
        lhs: lhs.with_var(Variable::Ell),
        rhs: rhs.with_var(Variable::Ell),
    }
}

/// `(l+1) F A_j = (l+1) (-2j-q)_2 (N-2j-q+1)_2 A_{j-1}` where
/// `(l+1) F f = Omega_num f(l+1) - (l+1) sum_t (-l)_t xi_t(2l+q,N) f(l-t)`.
pub fn a_forward_shift(params: &FamilyParamsA, j: usize) -> Result<PolyIdentity> {
    params.check_index(j)?;
    if j == 0 {
        return Err(Error::InvalidParams("forward shift needs j >= 1".into()));
    }
    let polys = a_poly_recurrence(params, j)?;
    let l1 = UPoly::linear(Rational::one(), Rational::one());
    let a = &polys[j];
    let lhs = &(&omega_numerator(params.q, params.n) * &a.shift_i64(1)) - &(&l1 * &xi_sum(params.q, params.n, a));
    let (q, big_n) = (params.q as i64, params.n as i64);
    let jj = j as i64;
    let factor = poch(-2 * jj - q, 2) * poch(big_n - 2 * jj - q + 1, 2);
    let rhs = (&l1 * &polys[j - 1]).scale(&factor);
    PolyIdentity {
        name: format!("A forward shift, q={} N={} j={j}", params.q, params.n),
        lhs: lhs.with_var(Variable::Ell),
        rhs: rhs.with_var(Variable::Ell),
    }
    .into_result()
}
