//! Inverse matrix elements and biorthogonality of the A family.

use serde::{Deserialize, Serialize};

use super::{a_poly_recurrence, FamilyParamsA, Sigma1, SigmaTable};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, poch, Rational, UPoly};
use crate::su2rep::{matrix_s, matrix_s_inverse, reflect, RationalMatrix};

/// `chi~` with `(a, b) = (1, c)`; see [`inverse_elements_a_with`].
pub fn inverse_elements_a(params: &FamilyParamsA) -> Result<RationalMatrix> {
    inverse_elements_a_with(params, &Rational::one(), &params.c)
}

/// The rationalized inverse `chi~ = exp(-b J-^2) exp(-a J+^2)`, checked against
/// the reflection `chi~_{n,k} = psi~*_{N-k,N-n} C(N,k)/C(N,n)` and, when
/// `N` is even, against the closed form in terms of `A_{p-j}(p-l)`.
pub fn inverse_elements_a_with(params: &FamilyParamsA, a: &Rational, b: &Rational) -> Result<RationalMatrix> {
    let chi = matrix_s_inverse(params.n, a, b);
    let reflected = reflect(&matrix_s(params.n, &-a, &-b));
    if let Some((row, col)) = chi.first_difference(&reflected) {
        return Err(Error::ReflectionMismatch { row, col });
    }
    if params.n.is_multiple_of(2) && params.n >= 2 * params.q {
        if let Some((row, col)) = explicit_inverse_mismatch(params, a, b, &chi)? {
            return Err(Error::ReflectionMismatch { row, col });
        }
    }
    Ok(chi)
}

/// For `N = 2p + 2q`: `chi~_{n,k} = (-1)^{j-l} a^{j-l} / (p-l)! * n!/k! * A_{p-j}(p-l)`.
/// Returns the first offending `(n, k)`.
pub fn explicit_inverse_mismatch(
    params: &FamilyParamsA,
    a: &Rational,
    b: &Rational,
    chi: &RationalMatrix,
) -> Result<Option<(usize, usize)>> {
    let q = params.q;
    let p = (params.n - 2 * q) / 2;
    let pc = params.with_c(a * b)?;
    let polys = a_poly_recurrence(&pc, p)?;
    for j in 0..=p {
        for l in 0..=p {
            let (n, k) = (2 * j + q, 2 * l + q);
            let e = j as i32 - l as i32;
            let sign = if e.rem_euclid(2) == 0 { Rational::one() } else { Rational::integer(-1) };
            let v = sign * a.pow(e) / factorial(p - l) * factorial(n) / factorial(k)
                * polys[p - j].eval_i64((p - l) as i64);
            if &v != chi.get(n, k) {
                return Ok(Some((n, k)));
            }
        }
    }
    Ok(None)
}

/// Number of `(n, k)` where the inverse-element recurrence
/// `(k-n) chi_{n,k} = 2a (-n)_2 chi_{n-2,k} - 2b (n-N)_2 chi_{n+2,k}
///                    - 2ab sum_t (-b)^t sigma_t(n,N) (n-N)_{2t} chi_{n+2t,k}`
/// fails (rationalized form).
pub fn chi_recurrence_failures(n_rep: usize, a: &Rational, b: &Rational, variant: Sigma1) -> usize {
    let chi = matrix_s_inverse(n_rep, a, b);
    let g = |n: i64, k: usize| -> Rational {
        if n >= 0 && n as usize <= n_rep {
            chi.get(n as usize, k).clone()
        } else {
            Rational::zero()
        }
    };
    let big = n_rep as i64;
    let mut bad = 0;
    for n in 0..=n_rep {
        let sig = SigmaTable::with_variant(n, n_rep, variant);
        let ni = n as i64;
        for k in 0..=n_rep {
            let lhs = Rational::integer(k as i64 - ni) * g(ni, k);
            let mut rhs = Rational::integer(2) * a * poch(-ni, 2) * g(ni - 2, k)
                - Rational::integer(2) * b * poch(ni - big, 2) * g(ni + 2, k);
            let mut mb = Rational::one();
            for t in 0..4 {
                rhs -= Rational::integer(2) * a * b * &mb * &sig.sigma[t] * poch(ni - big, 2 * t) * g(ni + 2 * t as i64, k);
                mb *= -b;
            }
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    bad
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiorthoReport {
    #[serde(rename = "N")]
    pub n: usize,
    /// `(q, q')`.
    pub q_pair: (usize, usize),
    pub table: Vec<Vec<Rational>>,
    pub passed: bool,
}

pub(crate) fn delta_table_ok(table: &[Vec<Rational>]) -> bool {
    table.iter().enumerate().all(|(j, row)| {
        row.iter().enumerate().all(|(jp, v)| {
            if j == jp {
                v == &if j % 2 == 0 { Rational::one() } else { Rational::integer(-1) }
            } else {
                v.is_zero()
            }
        })
    })
}

fn weighted_table(p: usize, left: &[UPoly], right: &[UPoly]) -> Vec<Vec<Rational>> {
    let w: Vec<Rational> = (0..=p)
        .map(|l| {
            let s = if l % 2 == 0 { Rational::one() } else { Rational::integer(-1) };
            s / (factorial(l) * factorial(p - l))
        })
        .collect();
    (0..=p)
        .map(|j| {
            (0..=p)
                .map(|jp| {
                    (0..=p)
                        .map(|l| &w[l] * left[j].eval_i64(l as i64) * right[p - jp].eval_i64((p - l) as i64))
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// `sum_l w_l(p) A_j^(q)(l) A_{p-j'}^(q')(p-l) = (-1)^j delta_{jj'}`, with
/// `w_l(p) = (-1)^l / (l! (p-l)!)`. Even `N = 2p+2q` pairs `q' = q`; odd
/// `N = 2p+1` pairs `q' = 1-q`.
pub fn biortho_poly_check_a(params: &FamilyParamsA) -> Result<BiorthoReport> {
    let (q, n) = (params.q, params.n);
    let (p, qp) = if n % 2 == 0 {
        if n < 2 * q {
            return Err(Error::InvalidParams(format!("N={n} < 2q")));
        }
        ((n - 2 * q) / 2, q)
    } else {
        ((n - 1) / 2, 1 - q)
    };
    let left = a_poly_recurrence(params, p)?;
    let other = FamilyParamsA::new(qp, params.c.clone(), n)?;
    let right = a_poly_recurrence(&other, p)?;
    let table = weighted_table(p, &left, &right);
    let passed = delta_table_ok(&table);
    Ok(BiorthoReport { n, q_pair: (q, qp), table, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn inverse_small_cases() {
        let p0 = FamilyParamsA::new(0, rat(1, 1), 0).unwrap();
        assert_eq!(inverse_elements_a(&p0).unwrap(), RationalMatrix::identity(1));
        let p4 = FamilyParamsA::new(0, rat(5, 1), 4).unwrap();
        let chi = inverse_elements_a(&p4).unwrap();
        assert!(chi.matmul(&matrix_s(4, &rat(1, 1), &rat(5, 1))).is_identity());
        let p5 = FamilyParamsA::new(1, rat(-3, 7), 5).unwrap();
        inverse_elements_a_with(&p5, &rat(-3, 1), &rat(1, 7)).unwrap();
    }

    #[test]
    fn explicit_inverse_general_a() {
        for n in 0..10usize {
            for q in 0..=1usize.min(n) {
                if n % 2 != 0 || n < 2 * q {
                    continue;
                }
                let (a, b) = (rat(2, 1), rat(1, 3));
                let pa = FamilyParamsA::new(q, &a * &b, n).unwrap();
                let chi = matrix_s_inverse(n, &a, &b);
                assert_eq!(explicit_inverse_mismatch(&pa, &a, &b, &chi).unwrap(), None, "N={n} q={q}");
            }
        }
    }

    #[test]
    fn sigma_corrected_vs_printed() {
        for n in 0..9 {
            assert_eq!(chi_recurrence_failures(n, &rat(2, 3), &rat(-5, 2), Sigma1::Corrected), 0);
        }
        assert!(chi_recurrence_failures(8, &rat(2, 3), &rat(-5, 2), Sigma1::Printed) > 0);
    }

    #[test]
    fn biortho_examples() {
        let r = biortho_poly_check_a(&FamilyParamsA::new(0, rat(1, 2), 4).unwrap()).unwrap();
        assert_eq!(r.table.len(), 3);
        assert!(r.passed);
        for q in 0..2 {
            let r = biortho_poly_check_a(&FamilyParamsA::new(q, rat(-3, 7), 5).unwrap()).unwrap();
            assert_eq!(r.q_pair, (q, 1 - q));
            assert!(r.passed);
        }
        for n in 1..11usize {
            let r = biortho_poly_check_a(&FamilyParamsA::new(0, rat(5, 1), n).unwrap()).unwrap();
            assert_eq!(r.table[0][0], Rational::one());
        }
    }
}
