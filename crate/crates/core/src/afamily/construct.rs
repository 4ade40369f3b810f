//! Three independent constructions of `A_j^(q)(l; c, N)`.

use super::{xi_poly, FamilyParamsA};
use crate::error::{Error, Result};
use crate::exactnum::{
    factorial, hyp_terminating_poly, poch, AffineForm, HypParam, Rational, UPoly, Variable,
};
use crate::su2rep::{matrix_s, RationalMatrix};

fn ell() -> UPoly {
    UPoly::x().with_var(Variable::Ell)
}

/// `A_0..A_{j_max}` from the five-term recurrence
/// `A_{j+1} = (l-j) A_j + c (-n)_2 (N-n+1)_2 A_{j-1}
///          + c sum_t (-c)^t xi_t(n,N) (-n)_{2t} (N-n+1)_{2t} A_{j-t}`, `n = 2j+q`.
pub fn a_poly_recurrence(params: &FamilyParamsA, j_max: usize) -> Result<Vec<UPoly>> {
    params.check_index(j_max)?;
    let big_n = params.n as i64;
    let c = &params.c;
    let mut out: Vec<UPoly> = vec![UPoly::one().with_var(Variable::Ell)];
    for j in 0..j_max {
        let n = params.index(j) as i64;
        let mut next = &(&ell() - &UPoly::constant(Rational::from(j))) * &out[j];
        if j >= 1 {
            let coef = c * poch(-n, 2) * poch(big_n - n + 1, 2);
            next = &next + &out[j - 1].scale(&coef);
        }
        let n_const = UPoly::constant(Rational::integer(n));
        let mut minus_c_pow = Rational::one();
        for t in 0..4 {
            if t <= j {
                let xi = xi_poly(t, &n_const, params.n).coeff(0);
                let coef = c * &minus_c_pow * xi * poch(-n, 2 * t) * poch(big_n - n + 1, 2 * t);
                next = &next + &out[j - t].scale(&coef);
            }
            minus_c_pow *= -c;
        }
        out.push(next.with_var(Variable::Ell));
    }
    Ok(out)
}

/// `(c^j / j!) (N-q)! n! / (N-n)!  2F3(-j, -l; q+1/2, (q-N)/2, (q-N+1)/2; 1/(16c))`.
pub fn a_poly_hypergeometric(params: &FamilyParamsA, j: usize) -> Result<UPoly> {
    params.check_index(j)?;
    let (q, big_n) = (params.q as i64, params.n as i64);
    let n = params.index(j);
    let num = [
        HypParam::Const(Rational::integer(-(j as i64))),
        HypParam::Affine(AffineForm::from_ints(-1, 0)),
    ];
    let den = [
        Rational::new(2 * q + 1, 2),
        Rational::new(q - big_n, 2),
        Rational::new(q - big_n + 1, 2),
    ];
    let z = (Rational::integer(16) * &params.c).recip();
    let series = hyp_terminating_poly(&num, &den, &z)?;
    let pref = params.c.pow(j as i32) / factorial(j) * factorial(params.n - params.q) * factorial(n)
        / factorial(params.n - n);
    Ok(series.scale(&pref).with_var(Variable::Ell))
}

/// `psi~_{k,q} = a^l k! / l!`, the column `n = q` of the rationalized `S`.
pub fn ground_state_a(a: &Rational, q: usize, l: usize) -> Rational {
    let k = 2 * l + q;
    a.pow(l as i32) * factorial(k) / factorial(l)
}

/// Values `A_j(l) = a^j n! psi~_{k,n} / psi~_{k,q}` read from a rationalized
/// `S` matrix with `ab = c`.
pub fn a_values_from_matrix(params: &FamilyParamsA, s: &RationalMatrix, a: &Rational, j: usize) -> Vec<Rational> {
    let n = params.index(j);
    let pref = a.pow(j as i32) * factorial(n);
    (0..=params.j_max())
        .map(|l| {
            let k = 2 * l + params.q;
            &pref * s.get(k, n) / s.get(k, params.q)
        })
        .collect()
}

/// Reads column `2j+q` of `S` with `(a, b) = (1, c)` and interpolates.
pub fn a_poly_from_matrix(params: &FamilyParamsA, j: usize) -> Result<UPoly> {
    a_poly_from_matrix_with(params, &Rational::one(), &params.c, j)
}

/// As [`a_poly_from_matrix`] with an explicit split `c = a b`.
pub fn a_poly_from_matrix_with(params: &FamilyParamsA, a: &Rational, b: &Rational, j: usize) -> Result<UPoly> {
    params.check_index(j)?;
    if (a * b) != params.c {
        return Err(Error::InvalidParams(format!("a*b = {} differs from c = {}", a * b, params.c)));
    }
    let s = matrix_s(params.n, a, b);
    let vals = a_values_from_matrix(params, &s, a, j);
    Ok(UPoly::interpolate_with_degree(&vals, j)?.with_var(Variable::Ell))
}
