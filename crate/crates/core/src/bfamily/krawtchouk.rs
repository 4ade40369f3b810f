//! The `M = 1` reduction to Krawtchouk polynomials and the separability of
//! the `alpha` parameter set.

use super::{b_poly_recurrence, FamilyParamsB};
use crate::error::Result;
use crate::exactnum::{check_s_separable, factorial, AffineForm, Rational, Separability};
use crate::limits::krawtchouk_poly;

/// Whether `B_n = (ab)^n N!/(N-n)! K_n(k; -ab, N)` holds for every `n ≤ N`.
pub fn krawtchouk_relation_holds(big_n: usize, a: &Rational, b: &Rational) -> Result<bool> {
    let f = a * b;
    let params = FamilyParamsB::new(1, f.clone(), big_n)?;
    let polys = b_poly_recurrence(&params, big_n)?;
    let p = -&f;
    for (n, bn) in polys.iter().enumerate() {
        let scale = f.pow(n as i32) * factorial(big_n) / factorial(big_n - n);
        if &krawtchouk_poly(n, &p, big_n)?.scale(&scale) != bn {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set `alpha_m = (q - k + m)/M`, `m = 0..M-1`, as affine forms in `k`.
pub fn alpha_set(m: usize, q: usize) -> Vec<AffineForm> {
    let mm = m as i64;
    (0..mm)
        .map(|i| AffineForm::new(Rational::new(-1, mm), Rational::new(q as i64 + i, mm)))
        .collect()
}

/// s-separability of [`alpha_set`].
pub fn alpha_separability(m: usize, q: usize) -> Result<Separability> {
    check_s_separable(&alpha_set(m, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn relation_small_n() {
        for n in 0..=8 {
            assert!(krawtchouk_relation_holds(n, &rat(1, 1), &rat(1, 3)).unwrap());
            assert!(krawtchouk_relation_holds(n, &rat(2, 1), &rat(-1, 5)).unwrap());
        }
    }

    #[test]
    fn alpha_separable_only_for_m1() {
        assert!(alpha_separability(1, 0).unwrap().separable);
        for m in 2..=4 {
            for q in 0..m {
                assert!(!alpha_separability(m, q).unwrap().separable, "M={m} q={q}");
            }
        }
    }
}
