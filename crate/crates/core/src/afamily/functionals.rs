//! The three functionals `L_i^(q)` and the row decomposition of the inverse
//! matrix.

use serde::{Deserialize, Serialize};

use super::{a_poly_recurrence, FamilyParamsA};
use crate::dortho::{check_moment_pattern, solve_decomposition, unknown_count, Decomposition, Moment};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, LinearFunctional, Rational};
use crate::su2rep::matrix_s_inverse;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalsReport {
    pub functionals: Vec<LinearFunctional>,
    pub moments: Vec<Moment>,
}

/// `L_i` with `(a, b) = (1, c)`; see [`functionals_a_with`].
pub fn functionals_a(params: &FamilyParamsA) -> Result<FunctionalsReport> {
    functionals_a_with(params, &Rational::one(), &params.c)
}

/// Weights `a^x / x! * (2x+q)! * chi~_{2i+q, 2x+q}` for `x = 0..=floor((N-q)/2)`,
/// the rationalized counterpart of `a^x/x! sqrt((2x+q)!/(N-2x-q)!) Xi_i(x)`.
/// The moment pattern is checked for every `gamma` up to `j_max / 3 + 1`.
pub fn functionals_a_with(params: &FamilyParamsA, a: &Rational, b: &Rational) -> Result<FunctionalsReport> {
    let q = params.q;
    if params.n < 4 + q {
        return Err(Error::InvalidParams(format!("functionals need N >= {}, got {}", 4 + q, params.n)));
    }
    if a * b != params.c {
        return Err(Error::InvalidParams("a*b must equal c".into()));
    }
    let chi = matrix_s_inverse(params.n, a, b);
    let grid: Vec<i64> = (0..=params.j_max() as i64).collect();
    let functionals: Vec<LinearFunctional> = (0..3)
        .map(|i| {
            let weights = grid
                .iter()
                .map(|&x| {
                    let x = x as usize;
                    a.pow(x as i32) / factorial(x) * factorial(2 * x + q) * chi.get(2 * i + q, 2 * x + q)
                })
                .collect();
            LinearFunctional::new(format!("L{i}^({q})"), grid.clone(), weights)
        })
        .collect();
    let polys = a_poly_recurrence(params, params.j_max())?;
    let moments = check_moment_pattern(&functionals, &polys, params.j_max() / 3 + 1)?;
    Ok(FunctionalsReport { functionals, moments })
}

/// Decomposes row `2j+q` of `chi~` (with `(a, b) = (1, c)`) as
/// `sum_i Y_i(l) chi~_{2i+q, 2l+q}`. The grid is chosen so the linear system
/// is overdetermined: `N = 2 max(u+1, j+1) + q`, `u` the number of unknowns.
pub fn proposition1(q: usize, c: &Rational, j: usize) -> Result<Decomposition> {
    let u = unknown_count(j);
    let n = 2 * (u + 1).max(j + 1) + q;
    let chi = matrix_s_inverse(n, &Rational::one(), c);
    let grid: Vec<i64> = (0..=((n - q) / 2) as i64).collect();
    let row = |r: usize| -> Vec<Rational> { grid.iter().map(|&x| chi.get(r, 2 * x as usize + q).clone()).collect() };
    let xi = [row(q), row(2 + q), row(4 + q)];
    solve_decomposition(j, &xi, &row(2 * j + q), &grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn pattern_holds_small_grid() {
        for n in 4..11usize {
            for q in 0..2 {
                if n < 4 + q {
                    continue;
                }
                let pa = FamilyParamsA::new(q, rat(1, 2), n).unwrap();
                let rep = functionals_a(&pa).unwrap();
                let first = rep.moments.iter().find(|m| m.i == 0 && m.gamma == 0 && m.index == 0).unwrap();
                assert!(!first.value.is_zero());
            }
        }
    }

    #[test]
    fn too_small_n_rejected() {
        assert!(functionals_a(&FamilyParamsA::new(1, rat(1, 1), 4).unwrap()).is_err());
    }

    #[test]
    fn proposition_degrees() {
        for q in 0..2 {
            for j in 0..8 {
                let d = proposition1(q, &rat(1, 2), j).unwrap();
                assert!(d.matches_rule(), "q={q} j={j}: {:?}", d.solved_degrees());
            }
        }
    }
}
