//! Exact Gauss-Jordan elimination over the rationals.

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub rank: usize,
    pub unknowns: usize,
    /// `A x = b` has at least one solution.
    pub consistent: bool,
    /// The solution, present when the system is consistent and `rank == unknowns`.
    pub solution: Option<Vec<Rational>>,
}

impl SolveOutcome {
    pub fn is_unique(&self) -> bool {
        self.solution.is_some()
    }
}

/// Reduces `rows` (each of equal length) to reduced row echelon form in place
/// and returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * y;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// Solves `A x = b` exactly. `a` is row-major with `b.len()` rows.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<SolveOutcome> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("{} rows vs rhs of length {}", a.len(), b.len())));
    }
    let unknowns = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != unknowns) {
        return Err(Error::Dimension("ragged coefficient matrix".into()));
    }
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    let consistent = !pivots.contains(&unknowns);
    let rank = pivots.iter().filter(|&&c| c < unknowns).count();
    let solution = (consistent && rank == unknowns).then(|| {
        (0..unknowns).map(|i| aug[i][unknowns].clone()).collect()
    });
    Ok(SolveOutcome { rank, unknowns, consistent, solution })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::integer(x)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(3, 1), rat(5, 1)];
        let out = solve(&a, &b).unwrap();
        assert_eq!(out.solution.unwrap(), vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let ok = solve(&a, &[rat(1, 1), rat(2, 1), rat(3, 1)]).unwrap();
        assert!(ok.consistent && ok.is_unique());
        let bad = solve(&a, &[rat(1, 1), rat(2, 1), rat(4, 1)]).unwrap();
        assert!(!bad.consistent && bad.solution.is_none());
    }

    #[test]
    fn rank_deficient() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&a), 1);
        let out = solve(&a, &[rat(1, 1), rat(2, 1)]).unwrap();
        assert!(out.consistent);
        assert!(out.solution.is_none());
    }
}
