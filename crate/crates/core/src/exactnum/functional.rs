//! Linear functionals given by weights on a finite integer grid.

use serde::{Deserialize, Serialize};

use super::{Rational, UPoly};

/// `L[f] = sum_x weights[x] * f(grid[x])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFunctional {
    pub label: String,
    pub grid: Vec<i64>,
    pub weights: Vec<Rational>,
}

impl LinearFunctional {
    pub fn new(label: impl Into<String>, grid: Vec<i64>, weights: Vec<Rational>) -> Self {
        assert_eq!(grid.len(), weights.len(), "grid and weights differ in length");
        LinearFunctional { label: label.into(), grid, weights }
    }

    pub fn apply(&self, p: &UPoly) -> Rational {
        self.grid
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| !w.is_zero())
            .map(|(&x, w)| w * p.eval_i64(x))
            .sum()
    }

    /// `L[x^gamma p(x)]`.
    pub fn moment(&self, gamma: u32, p: &UPoly) -> Rational {
        self.grid
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| !w.is_zero())
            .map(|(&x, w)| w * Rational::integer(x).pow(gamma as i32) * p.eval_i64(x))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn apply_and_moment() {
        let l = LinearFunctional::new("t", vec![0, 1, 2], vec![rat(1, 1), rat(-2, 1), rat(1, 2)]);
        let p = UPoly::from_ints(&[1, 1]);
        // 1*1 - 2*2 + 1/2*3
        assert_eq!(l.apply(&p), rat(-3, 2));
        // 0 - 2*1*2 + 1/2*4*3
        assert_eq!(l.moment(2, &p), rat(2, 1));
        assert_eq!(l.moment(0, &p), l.apply(&p));
    }
}
