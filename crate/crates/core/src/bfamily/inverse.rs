//! Inverse matrix elements and biorthogonality of the B family.

use serde::{Deserialize, Serialize};

use super::{b_poly_recurrence, FamilyParamsB};
use crate::afamily::delta_table_ok;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rational};
use crate::su2rep::{matrix_q, matrix_q_inverse, reflect, RationalMatrix};

/// `varsigma~` with `(a, b) = (1, f)`.
pub fn inverse_elements_b(params: &FamilyParamsB) -> Result<RationalMatrix> {
    inverse_elements_b_with(params.n, &Rational::one(), &params.f, params.m)
}

/// The rationalized inverse `exp(-b J-^M) exp(-a J+)`, checked against the
/// reflection `varsigma~_{n,k} = phi~*_{N-k,N-n} C(N,k)/C(N,n)` where `*`
/// sends `(a, b)` to `(-a, -b)`.
pub fn inverse_elements_b_with(n: usize, a: &Rational, b: &Rational, m: usize) -> Result<RationalMatrix> {
    let inv = matrix_q_inverse(n, a, b, m);
    let reflected = reflect(&matrix_q(n, &-a, &-b, m));
    if let Some((row, col)) = inv.first_difference(&reflected) {
        return Err(Error::ReflectionMismatch { row, col });
    }
    Ok(inv)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiorthoReportB {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub f: Rational,
    pub f_dual: Rational,
    pub table: Vec<Vec<Rational>>,
    pub passed: bool,
}

/// `sum_k w_k B_n(k; f) B_{N-m}(N-k; f') = (-1)^n delta_{nm}` with
/// `w_k = (-1)^k / (k! (N-k)!)` and `f' = (-1)^{M+1} f`.
pub fn biortho_poly_check_b(params: &FamilyParamsB) -> Result<BiorthoReportB> {
    let big_n = params.n;
    let f_dual = if params.m % 2 == 1 { params.f.clone() } else { -&params.f };
    let left = b_poly_recurrence(params, big_n)?;
    let right = b_poly_recurrence(&params.with_f(f_dual.clone())?, big_n)?;
    let w: Vec<Rational> = (0..=big_n)
        .map(|k| Rational::integer(if k % 2 == 0 { 1 } else { -1 }) / (factorial(k) * factorial(big_n - k)))
        .collect();
    let table: Vec<Vec<Rational>> = (0..=big_n)
        .map(|n| {
            (0..=big_n)
                .map(|m| {
                    (0..=big_n)
                        .map(|k| &w[k] * left[n].eval_i64(k as i64) * right[big_n - m].eval_i64((big_n - k) as i64))
                        .sum()
                })
                .collect()
        })
        .collect();
    let passed = delta_table_ok(&table);
    Ok(BiorthoReportB { m: params.m, n: big_n, f: params.f.clone(), f_dual, table, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn inverse_and_reflection() {
        for m in 1..=3 {
            for n in 0..=7 {
                let (a, b) = (rat(2, 3), rat(-1, 2));
                let inv = inverse_elements_b_with(n, &a, &b, m).unwrap();
                assert!(inv.matmul(&matrix_q(n, &a, &b, m)).is_identity());
            }
        }
        let z = Rational::zero();
        assert!(inverse_elements_b_with(4, &z, &z, 2).unwrap().is_identity());
    }

    #[test]
    fn biortho_tables() {
        for m in 1..=3 {
            for n in 0..=7 {
                let r = biortho_poly_check_b(&FamilyParamsB::new(m, rat(1, 3), n).unwrap()).unwrap();
                assert!(r.passed, "M={m} N={n}");
                assert_eq!(r.table[0][0], Rational::one());
            }
        }
        let r = biortho_poly_check_b(&FamilyParamsB::new(2, rat(-2, 5), 4).unwrap()).unwrap();
        assert_eq!(r.table.len(), 5);
        assert_eq!(r.f_dual, rat(2, 5));
    }
}
