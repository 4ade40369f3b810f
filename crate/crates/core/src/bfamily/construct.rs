//! Three independent constructions of `B_n(k; f, N)`.

use super::{FamilyParamsB, ZetaTable};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, hyp_terminating_poly, AffineForm, HypParam, Rational, UPoly, Variable};
use crate::su2rep::{matrix_q, RationalMatrix};

fn kvar() -> UPoly {
    UPoly::x().with_var(Variable::K)
}

/// `B_0..B_{n_max}` from
/// `B_{n+1} = (k-n) B_n + f zeta_M B_{n-M} + f zeta_{M-1} B_{n+1-M} + f^2 zeta_{2M-1} B_{n+1-2M}`.
pub fn b_poly_recurrence(params: &FamilyParamsB, n_max: usize) -> Result<Vec<UPoly>> {
    params.check_index(n_max)?;
    let (m, f) = (params.m, &params.f);
    let mut out: Vec<UPoly> = vec![UPoly::one().with_var(Variable::K)];
    let back = |out: &[UPoly], n: usize, s: usize| -> Option<UPoly> { (n + 1 >= s).then(|| out[n + 1 - s].clone()) };
    for n in 0..n_max {
        let z = ZetaTable::new(m, n, params.n);
        let mut next = &(&kvar() - &UPoly::constant(Rational::from(n))) * &out[n];
        if let Some(p) = back(&out, n, m + 1) {
            next = &next + &p.scale(&(f * &z.zeta_m));
        }
        if let Some(p) = back(&out, n, m) {
            next = &next + &p.scale(&(f * &z.zeta_m1));
        }
        if let Some(p) = back(&out, n, 2 * m) {
            next = &next + &p.scale(&(f * f * &z.zeta_2m1));
        }
        out.push(next.with_var(Variable::K));
    }
    Ok(out)
}

/// `(-1)^q f^j (-k)_q / (j! q!) (N-q)! n! / (N-n)!
///  * 1+MF2M-1(-j, alpha; beta, gamma; -1/(M^M f))` with
/// `alpha_m = (q-k+m)/M`, `beta_m = (q+m+1)/M` (skipping `q+m+1 = M`),
/// `gamma_m = (q-N+m)/M`, `n = Mj + q`.
pub fn b_poly_hypergeometric(params: &FamilyParamsB, n: usize) -> Result<UPoly> {
    params.check_index(n)?;
    let (j, q) = params.residue(n);
    let m = params.m as i64;
    let mm = Rational::integer(m);
    let mut num = vec![HypParam::Const(Rational::integer(-(j as i64)))];
    num.extend((0..m).map(|i| HypParam::Affine(AffineForm::new(-mm.recip(), Rational::new(q as i64 + i, m)))));
    let mut den: Vec<Rational> = (0..m)
        .filter(|i| q as i64 + i + 1 != m)
        .map(|i| Rational::new(q as i64 + i + 1, m))
        .collect();
    den.extend((0..m).map(|i| Rational::new(q as i64 - params.n as i64 + i, m)));
    let z = -(mm.pow(m as i32) * &params.f).recip();
    let series = hyp_terminating_poly(&num, &den, &z)?;
    let minus_k = UPoly::linear(Rational::integer(-1), Rational::zero());
    let sign = Rational::integer(if q % 2 == 0 { 1 } else { -1 });
    let pref = sign * params.f.pow(j as i32) / (factorial(j) * factorial(q)) * factorial(params.n - q) * factorial(n)
        / factorial(params.n - n);
    Ok((&minus_k.pochhammer(q) * &series).scale(&pref).with_var(Variable::K))
}

/// Values `B_n(k) = a^n n! phi~_{k,n} / phi~_{k,0}` with `phi~_{k,0} = a^k`.
pub fn b_values_from_matrix(q: &RationalMatrix, a: &Rational, n: usize) -> Vec<Rational> {
    let pref = a.pow(n as i32) * factorial(n);
    (0..q.rows()).map(|k| &pref * q.get(k, n) / q.get(k, 0)).collect()
}

/// Reads column `n` of `Q` with `(a, b) = (1, f)` and interpolates.
pub fn b_poly_from_matrix(params: &FamilyParamsB, n: usize) -> Result<UPoly> {
    b_poly_from_matrix_with(params, &Rational::one(), &params.f, n)
}

/// As [`b_poly_from_matrix`] with an explicit split `f = a^M b`.
pub fn b_poly_from_matrix_with(params: &FamilyParamsB, a: &Rational, b: &Rational, n: usize) -> Result<UPoly> {
    params.check_index(n)?;
    if a.is_zero() || a.pow(params.m as i32) * b != params.f {
        return Err(Error::InvalidParams(format!("a^M b differs from f = {}", params.f)));
    }
    let q = matrix_q(params.n, a, b, params.m);
    let vals = b_values_from_matrix(&q, a, n);
    Ok(UPoly::interpolate_with_degree(&vals, n)?.with_var(Variable::K))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn first_polys() {
        let p = FamilyParamsB::new(1, rat(2, 3), 5).unwrap();
        let r = b_poly_recurrence(&p, 5).unwrap();
        assert_eq!(r[0], UPoly::one());
        // k + f N
        assert_eq!(r[1], UPoly::new(vec![rat(10, 3), rat(1, 1)]));
        assert_eq!(b_poly_hypergeometric(&p, 1).unwrap(), r[1]);
        assert_eq!(b_poly_hypergeometric(&p, 0).unwrap(), UPoly::one());
    }

    #[test]
    fn two_by_two_matrix() {
        let f = rat(3, 4);
        let p = FamilyParamsB::new(1, f.clone(), 1).unwrap();
        assert_eq!(b_poly_from_matrix(&p, 1).unwrap(), UPoly::new(vec![f, rat(1, 1)]));
    }

    #[test]
    fn triangle_small() {
        for m in 1..=3 {
            for n in 0..=7 {
                for f in [rat(1, 1), rat(1, 3), rat(-2, 5)] {
                    let p = FamilyParamsB::new(m, f, n).unwrap();
                    let r = b_poly_recurrence(&p, n).unwrap();
                    for (i, ri) in r.iter().enumerate() {
                        assert!(ri.is_monic());
                        assert_eq!(b_poly_hypergeometric(&p, i).unwrap(), *ri, "hyp M={m} N={n} n={i}");
                        assert_eq!(b_poly_from_matrix(&p, i).unwrap(), *ri, "mat M={m} N={n} n={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn depends_only_on_f() {
        let f = rat(-2, 5);
        for m in 1..=3 {
            let p = FamilyParamsB::new(m, f.clone(), 6).unwrap();
            let a = rat(2, 1);
            let b = &f / a.pow(m as i32);
            for n in 0..=6 {
                assert_eq!(b_poly_from_matrix_with(&p, &a, &b, n).unwrap(), b_poly_from_matrix(&p, n).unwrap());
            }
        }
        let p = FamilyParamsB::new(1, f.clone(), 4).unwrap();
        assert_eq!(
            b_poly_from_matrix_with(&p, &f, &rat(1, 1), 3).unwrap(),
            b_poly_from_matrix(&p, 3).unwrap()
        );
    }
}
