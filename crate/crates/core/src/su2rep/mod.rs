//! su(2) irreps in a rationalized basis, exponentials of ladder polynomials
//! and the operator identities they satisfy.

mod coherent;
mod identities;
mod matrix;
mod rep;

pub use coherent::{coherent_components_c64, coherent_vector, CoherentVector};
pub use identities::{verify_conjugation_identities, ConjugationReport, IdentityCheck};
pub use matrix::RationalMatrix;
pub use rep::{
    basis_ratio, build_rep, exp_nilpotent, ladder_power_law_holds, matrix_q, matrix_q_inverse, matrix_s,
    matrix_s_inverse, reflect, RepMatrices,
};

use num_complex::Complex64;

/// Applies a rationalized matrix to a complex vector.
pub fn apply_c64(m: &RationalMatrix, v: &[Complex64]) -> Vec<Complex64> {
    let f = m.to_f64();
    f.iter().map(|row| row.iter().zip(v).map(|(a, x)| x * *a).sum()).collect()
}

/// Which ladder operator a floating-point helper acts with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// `(J v)_i` for the rationalized ladder matrices, in floating point.
pub fn ladder_apply_c64(n: usize, which: Ladder, v: &[Complex64]) -> Vec<Complex64> {
    (0..=n)
        .map(|i| match which {
            Ladder::Raise if i >= 1 => v[i - 1] * i as f64,
            Ladder::Lower if i < n => v[i + 1] * (n - i) as f64,
            _ => Complex64::new(0.0, 0.0),
        })
        .collect()
}

/// `exp(coeff * J^power) v` by its (finite) series.
pub fn exp_ladder_apply_c64(n: usize, which: Ladder, power: usize, coeff: Complex64, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    for s in 1..=n + 1 {
        for _ in 0..power {
            term = ladder_apply_c64(n, which, &term);
        }
        for t in term.iter_mut() {
            *t *= coeff / s as f64;
        }
        if term.iter().all(|t| t.norm() == 0.0) {
            break;
        }
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn float_exp_matches_exact() {
        let (a, b) = (rat(1, 3), rat(-2, 5));
        let n = 7;
        let u: Vec<Complex64> = (0..=n).map(|i| Complex64::new(0.3 * i as f64, -0.1)).collect();
        let exact = apply_c64(&matrix_s(n, &a, &b), &u);
        let step = exp_ladder_apply_c64(n, Ladder::Lower, 2, Complex64::new(b.to_f64(), 0.0), &u);
        let float = exp_ladder_apply_c64(n, Ladder::Raise, 2, Complex64::new(a.to_f64(), 0.0), &step);
        for (x, y) in exact.iter().zip(&float) {
            assert!((x - y).norm() < 1e-12 * (1.0 + x.norm()));
        }
    }
}
