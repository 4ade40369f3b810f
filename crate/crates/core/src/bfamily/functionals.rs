//! The functionals `M_i` at `M = 2` and the row decomposition of `varsigma~`.

use serde::{Deserialize, Serialize};

use super::{b_poly_recurrence, FamilyParamsB};
use crate::dortho::{check_moment_pattern, solve_decomposition, unknown_count, Decomposition, Moment};
use crate::error::{Error, Result};
use crate::exactnum::{LinearFunctional, Rational};
use crate::su2rep::matrix_q_inverse;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalsReportB {
    pub functionals: Vec<LinearFunctional>,
    pub moments: Vec<Moment>,
}

/// `M_i` with `(a, b) = (1, f)`; see [`functionals_b_with`].
pub fn functionals_b(params: &FamilyParamsB) -> Result<FunctionalsReportB> {
    functionals_b_with(params, &Rational::one(), &params.f)
}

/// Weights `a^x varsigma~_{i,x}` for `x = 0..=N`, the rationalized form of
/// `a^x sqrt(C(N,x)) Xi_i(x)`. Checks the moment pattern for `gamma` up to
/// `N / 3 + 1`.
pub fn functionals_b_with(params: &FamilyParamsB, a: &Rational, b: &Rational) -> Result<FunctionalsReportB> {
    if params.m != 2 {
        return Err(Error::InvalidParams(format!("functionals need M = 2, got {}", params.m)));
    }
    if params.n < 2 {
        return Err(Error::InvalidParams(format!("functionals need N >= 2, got {}", params.n)));
    }
    if a.pow(2) * b != params.f {
        return Err(Error::InvalidParams("a^2 b must equal f".into()));
    }
    let inv = matrix_q_inverse(params.n, a, b, 2);
    let grid: Vec<i64> = (0..=params.n as i64).collect();
    let functionals = (0..3)
        .map(|i| {
            let weights = (0..=params.n).map(|x| a.pow(x as i32) * inv.get(i, x)).collect();
            LinearFunctional::new(format!("M{i}"), grid.clone(), weights)
        })
        .collect::<Vec<_>>();
    let polys = b_poly_recurrence(params, params.n)?;
    let moments = check_moment_pattern(&functionals, &polys, params.n / 3 + 1)?;
    Ok(FunctionalsReportB { functionals, moments })
}

/// Decomposes row `n` of `varsigma~` (`M = 2`, `(a, b) = (1, f)`) as
/// `sum_i Y_i(x) varsigma~_{i,x}` on `N = max(u+1, n)`.
pub fn proposition2(f: &Rational, n: usize) -> Result<Decomposition> {
    let big_n = (unknown_count(n) + 1).max(n);
    let inv = matrix_q_inverse(big_n, &Rational::one(), f, 2);
    let grid: Vec<i64> = (0..=big_n as i64).collect();
    let row = |r: usize| inv.row(r).to_vec();
    let xi = [row(0), row(1), row(2)];
    solve_decomposition(n, &xi, &row(n), &grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn pattern_holds() {
        for n in 2..=10 {
            let rep = functionals_b(&FamilyParamsB::new(2, rat(1, 2), n).unwrap()).unwrap();
            let first = &rep.moments[0];
            assert_eq!((first.i, first.gamma, first.index), (0, 0, 0));
            assert!(!first.value.is_zero());
        }
        let p = FamilyParamsB::new(2, rat(-2, 5), 6).unwrap();
        functionals_b_with(&p, &rat(2, 1), &rat(-1, 10)).unwrap();
    }

    #[test]
    fn proposition_degrees() {
        for n in 0..=9 {
            let d = proposition2(&rat(1, 2), n).unwrap();
            assert!(d.matches_rule(), "n={n}: {:?}", d.solved_degrees());
        }
    }
}
