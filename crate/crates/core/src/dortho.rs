//! Shared machinery for the vector-orthogonality checks: moment patterns of
//! the functionals and the three-term decomposition of inverse-matrix rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{linalg, LinearFunctional, Rational, UPoly};

/// One moment `L_i[x^gamma P_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moment {
    pub i: usize,
    pub gamma: usize,
    pub index: usize,
    pub value: Rational,
}

/// Computes `L_i[x^gamma P_j]` for every functional, `gamma ≤ gamma_max` and
/// polynomial, and checks the d = 3 pattern: zero when `j ≥ 3 gamma + i + 1`,
/// nonzero when `j = 3 gamma + i`.
pub fn check_moment_pattern(
    functionals: &[LinearFunctional],
    polys: &[UPoly],
    gamma_max: usize,
) -> Result<Vec<Moment>> {
    let mut out = Vec::new();
    for (i, f) in functionals.iter().enumerate() {
        for gamma in 0..=gamma_max {
            for (j, p) in polys.iter().enumerate() {
                let value = f.moment(gamma as u32, p);
                let must_vanish = j > 3 * gamma + i;
                let must_not = j == 3 * gamma + i;
                if (must_vanish && !value.is_zero()) || (must_not && value.is_zero()) {
                    return Err(Error::PatternViolation { i, gamma, index: j });
                }
                out.push(Moment { i, gamma, index: j, value });
            }
        }
    }
    Ok(out)
}

/// Degrees of `Y_0, Y_1, Y_2` predicted for index `j = 3 gamma + delta`:
/// `gamma` when `i ≤ delta`, `gamma - 1` otherwise (`None` for degree -1).
pub fn degree_rule(j: usize) -> [Option<usize>; 3] {
    let (gamma, delta) = (j / 3, j % 3);
    std::array::from_fn(|i| if i <= delta { Some(gamma) } else { gamma.checked_sub(1) })
}

/// Number of unknown coefficients for [`degree_rule`].
pub fn unknown_count(j: usize) -> usize {
    degree_rule(j).iter().flatten().map(|d| d + 1).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub index: usize,
    /// Grid size used for the linear solve.
    pub points: usize,
    pub rule: [Option<usize>; 3],
    /// Solved `Y_i`, present when the system has a unique solution.
    pub y: Option<[UPoly; 3]>,
    pub consistent: bool,
    pub full_rank: bool,
}

impl Decomposition {
    /// Degrees of the solved polynomials (`None` = zero polynomial).
    pub fn solved_degrees(&self) -> Option<[Option<usize>; 3]> {
        self.y.as_ref().map(|y| std::array::from_fn(|i| y[i].degree()))
    }

    /// `j ≥ 3`: every `deg Y_i` equals the rule. `j ≤ 2`: `Y_i = delta_{ij}`.
    pub fn matches_rule(&self) -> bool {
        let Some(y) = &self.y else { return false };
        if !self.consistent || !self.full_rank {
            return false;
        }
        if self.index <= 2 {
            return (0..3).all(|i| if i == self.index { y[i] == UPoly::one() } else { y[i].is_zero() });
        }
        (0..3).all(|i| y[i].degree() == self.rule[i])
    }
}

/// Solves `target(x) = sum_i Y_i(x) xi[i](x)` on `grid` with the degrees of
/// [`degree_rule`].
pub fn solve_decomposition(index: usize, xi: &[Vec<Rational>; 3], target: &[Rational], grid: &[i64]) -> Result<Decomposition> {
    let rule = degree_rule(index);
    let mut columns: Vec<(usize, usize)> = Vec::new();
    for (i, d) in rule.iter().enumerate() {
        if let Some(d) = d {
            for e in 0..=*d {
                columns.push((i, e));
            }
        }
    }
    let a: Vec<Vec<Rational>> = grid
        .iter()
        .enumerate()
        .map(|(t, &x)| {
            columns
                .iter()
                .map(|&(i, e)| &xi[i][t] * Rational::integer(x).pow(e as i32))
                .collect()
        })
        .collect();
    let outcome = linalg::solve(&a, target)?;
    let y = outcome.solution.as_ref().map(|sol| {
        let mut coeffs: [Vec<Rational>; 3] = Default::default();
        for (&(i, e), v) in columns.iter().zip(sol) {
            if coeffs[i].len() <= e {
                coeffs[i].resize(e + 1, Rational::zero());
            }
            coeffs[i][e] = v.clone();
        }
        coeffs.map(UPoly::new)
    });
    Ok(Decomposition {
        index,
        points: grid.len(),
        rule,
        y,
        consistent: outcome.consistent,
        full_rank: outcome.rank == outcome.unknowns,
    })
}

/// An identity `lhs = rhs` between polynomials, compared coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyIdentity {
    pub name: String,
    pub lhs: UPoly,
    pub rhs: UPoly,
}

impl PolyIdentity {
    pub fn residual(&self) -> UPoly {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub(crate) fn into_result(self) -> Result<PolyIdentity> {
        if self.holds() {
            Ok(self)
        } else {
            Err(Error::IdentityFailure { name: self.name.clone(), residual: self.residual().to_string() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_table() {
        assert_eq!(degree_rule(0), [Some(0), None, None]);
        assert_eq!(degree_rule(2), [Some(0), Some(0), Some(0)]);
        assert_eq!(degree_rule(3), [Some(1), Some(0), Some(0)]);
        assert_eq!(degree_rule(7), [Some(2), Some(2), Some(1)]);
        assert_eq!(unknown_count(7), 8);
    }

    #[test]
    fn pattern_detects_violation() {
        let f = LinearFunctional::new("L0", vec![0, 1], vec![Rational::one(), Rational::one()]);
        let polys = vec![UPoly::one(), UPoly::x()];
        // L0[P_1] = 1 must vanish
        assert_eq!(
            check_moment_pattern(&[f], &polys, 0),
            Err(Error::PatternViolation { i: 0, gamma: 0, index: 1 })
        );
    }
}
