//! Affine forms and the s-separability test for sets of them.

use serde::{Deserialize, Serialize};

use super::{Rational, UPoly};
use crate::error::{Error, Result};

/// `slope * k + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineForm {
    pub slope: Rational,
    pub intercept: Rational,
}

impl AffineForm {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        AffineForm { slope, intercept }
    }

    pub fn from_ints(slope: i64, intercept: i64) -> Self {
        AffineForm::new(Rational::integer(slope), Rational::integer(intercept))
    }

    /// `self + m`.
    pub fn shifted(&self, m: &Rational) -> AffineForm {
        AffineForm::new(self.slope.clone(), &self.intercept + m)
    }

    pub fn to_poly(&self) -> UPoly {
        UPoly::linear(self.slope.clone(), self.intercept.clone())
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        &self.slope * k + &self.intercept
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separability {
    pub separable: bool,
    /// `pi(y)`, present only when separable.
    pub pi: Option<UPoly>,
}

/// Expands `prod_i (a_i(k) + y)` and checks that every monomial carrying a
/// positive power of `y` is free of `k`.
pub fn check_s_separable(set: &[AffineForm]) -> Result<Separability> {
    if set.iter().any(|f| f.slope.is_zero()) {
        return Err(Error::ZeroSlope);
    }
    // by_y[m] is the coefficient (a polynomial in k) of y^m.
    let mut by_y: Vec<UPoly> = vec![UPoly::one()];
    for form in set {
        let a = form.to_poly();
        let mut next = vec![UPoly::zero(); by_y.len() + 1];
        for (m, c) in by_y.iter().enumerate() {
            next[m] = &next[m] + &(c * &a);
            next[m + 1] = &next[m + 1] + c;
        }
        by_y = next;
    }
    let separable = by_y.iter().skip(1).all(|c| c.degree().unwrap_or(0) == 0);
    let pi = separable.then(|| {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(by_y.iter().skip(1).map(|c| c.coeff(0)));
        UPoly::new(coeffs).with_var(super::Variable::Y)
    });
    Ok(Separability { separable, pi })
}
