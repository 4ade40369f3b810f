//! The five-point difference equation of the B family at `M = 2`.

use super::{b_poly_recurrence, FamilyParamsB};
use crate::dortho::PolyIdentity;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, UPoly, Variable};

/// Which coefficient set the difference operator is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DifferenceForm {
    /// `zeta_0 = 6k^2 - 6kN + N(N-1)`, `(k+1)`-coefficient `4f(2k-N+1)(N-k)`.
    Corrected,
    /// `zeta_0 = 6k^2 - 6kN + N(N+1)`, `(k+1)`-coefficient `4f zeta_1 (N-k)`
    /// with `zeta_1 = 2k-N-1`.
    Printed,
}

fn k_lin(slope: i64, intercept: i64) -> UPoly {
    UPoly::linear(Rational::integer(slope), Rational::integer(intercept))
}

fn cst(x: i64) -> UPoly {
    UPoly::constant(Rational::integer(x))
}

/// Applies
/// `2f(k-N)_2 B(k+2) + 4f c_1(k)(N-k) B(k+1) + (k + 2f zeta_0) B(k)
///  - k(4f zeta_1 + 1) B(k-1) + 2f(-k)_2 B(k-2)` to `b`.
pub fn b_difference_operator(big_n: usize, f: &Rational, b: &UPoly, form: DifferenceForm) -> UPoly {
    let nn = big_n as i64;
    let k = k_lin(1, 0);
    let f2 = f * Rational::integer(2);
    let f4 = f * Rational::integer(4);
    let zeta1 = k_lin(2, -nn - 1);
    let (zeta0, c1) = match form {
        DifferenceForm::Corrected => (nn * (nn - 1), k_lin(2, -nn + 1)),
        DifferenceForm::Printed => (nn * (nn + 1), zeta1.clone()),
    };
    let zeta0 = &(&(&k * &k).scale(&Rational::integer(6)) - &k.scale(&Rational::integer(6 * nn))) + &cst(zeta0);
    let t2 = &k_lin(1, -nn).pochhammer(2).scale(&f2) * &b.shift_i64(2);
    let t1 = &(&c1 * &k_lin(-1, nn)).scale(&f4) * &b.shift_i64(1);
    let t0 = &(&k + &zeta0.scale(&f2)) * b;
    let tm1 = &(&k * &(&zeta1.scale(&f4) + &cst(1))) * &b.shift_i64(-1);
    let tm2 = &k_lin(-1, 0).pochhammer(2).scale(&f2) * &b.shift_i64(-2);
    (&(&(&(&t2 + &t1) + &t0) - &tm1) + &tm2).with_var(Variable::K)
}

/// `D B_n = n B_n` for `M = 2`, as a polynomial identity in `k`.
pub fn b_difference_identity(params: &FamilyParamsB, n: usize, form: DifferenceForm) -> Result<PolyIdentity> {
    if params.m != 2 {
        return Err(Error::InvalidParams(format!("difference equation needs M = 2, got {}", params.m)));
    }
    let b = &b_poly_recurrence(params, n)?[n];
    let name = match form {
        DifferenceForm::Corrected => "B difference equation",
        DifferenceForm::Printed => "B difference equation (printed coefficients)",
    };
    Ok(PolyIdentity {
        name: format!("{name}, N={}, n={n}", params.n),
        lhs: b.scale(&Rational::from(n)),
        rhs: b_difference_operator(params.n, &params.f, b, form),
    })
}

/// Checks the corrected identity, failing with its residual.
pub fn b_difference_check(params: &FamilyParamsB, n: usize) -> Result<PolyIdentity> {
    b_difference_identity(params, n, DifferenceForm::Corrected)?.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn corrected_holds_on_grid() {
        for big_n in 0..=10 {
            let p = FamilyParamsB::new(2, rat(1, 2), big_n).unwrap();
            for n in 0..=big_n {
                b_difference_check(&p, n).unwrap();
            }
        }
    }

    #[test]
    fn zero_index_and_small_example() {
        let p = FamilyParamsB::new(2, rat(1, 2), 4).unwrap();
        let id = b_difference_check(&p, 0).unwrap();
        assert!(id.lhs.is_zero() && id.rhs.is_zero());
        b_difference_check(&p, 1).unwrap();
    }

    #[test]
    fn printed_coefficients_fail() {
        let p = FamilyParamsB::new(2, rat(1, 2), 4).unwrap();
        for n in 0..=4 {
            assert!(!b_difference_identity(&p, n, DifferenceForm::Printed).unwrap().holds());
        }
    }

    #[test]
    fn requires_m2() {
        assert!(b_difference_check(&FamilyParamsB::new(1, rat(1, 2), 4).unwrap(), 1).is_err());
    }
}
