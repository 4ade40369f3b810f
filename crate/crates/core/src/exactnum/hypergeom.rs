//! Terminating generalized hypergeometric sums.
//!
//! A series `pFq[-n, a_2, ...; b_1, ...; z]` truncates after the `mu = n`
//! term. Both a scalar evaluator and a polynomial-valued one (numerator
//! parameters affine in the variable) are provided.

use super::{factorial, AffineForm, Rational, UPoly};
use crate::error::{Error, Result};

/// Degree of truncation encoded by a first numerator parameter `-n`.
fn truncation_degree(first: &Rational) -> Result<usize> {
    if !first.is_nonpositive_integer() {
        return Err(Error::NotTerminating(first.to_string()));
    }
    let n = first.to_i64().ok_or_else(|| Error::NotTerminating(first.to_string()))?;
    Ok((-n) as usize)
}

/// Checks that no `(b_j)_mu` vanishes for `mu <= n`.
fn check_denominators(den: &[Rational], n: usize) -> Result<()> {
    for (index, b) in den.iter().enumerate() {
        if b.is_nonpositive_integer() {
            let r = (-b.to_i64().unwrap_or(i64::MIN)) as usize;
            // (b)_mu contains the factor b + r = 0 once mu > r.
            if r < n {
                return Err(Error::ZeroDenominatorParameter { index, mu: r + 1 });
            }
        }
    }
    Ok(())
}

/// Evaluates `sum_{mu=0}^{n} prod (a_i)_mu / prod (b_j)_mu * z^mu / mu!` where
/// `num[0] = -n`.
pub fn hyp_terminating(num: &[Rational], den: &[Rational], z: &Rational) -> Result<Rational> {
    let first = num.first().ok_or_else(|| Error::InvalidParams("empty numerator list".into()))?;
    let n = truncation_degree(first)?;
    check_denominators(den, n)?;

    let mut sum = Rational::one();
    let mut term = Rational::one();
    for mu in 0..n {
        let m = Rational::from(mu);
        for a in num {
            term *= a + &m;
        }
        if term.is_zero() {
            break;
        }
        for b in den {
            term /= b + &m;
        }
        term *= z;
        term /= Rational::from(mu + 1);
        sum += &term;
    }
    Ok(sum)
}

/// A numerator parameter of a polynomial-valued series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypParam {
    Const(Rational),
    Affine(AffineForm),
}

impl From<Rational> for HypParam {
    fn from(v: Rational) -> Self {
        HypParam::Const(v)
    }
}

impl From<AffineForm> for HypParam {
    fn from(v: AffineForm) -> Self {
        HypParam::Affine(v)
    }
}

/// Same sum as [`hyp_terminating`] but with numerator parameters allowed to be
/// affine in the variable, so the result is a polynomial.
///
/// The first numerator parameter must be the constant `-n`.
pub fn hyp_terminating_poly(num: &[HypParam], den: &[Rational], z: &Rational) -> Result<UPoly> {
    let n = match num.first() {
        Some(HypParam::Const(c)) => truncation_degree(c)?,
        Some(HypParam::Affine(_)) => {
            return Err(Error::InvalidParams("first numerator parameter must be constant".into()))
        }
        None => return Err(Error::InvalidParams("empty numerator list".into())),
    };
    check_denominators(den, n)?;

    // Running pochhammer products: scalar part and polynomial part.
    let mut scalar = Rational::one();
    let mut poly = UPoly::one();
    let mut sum = UPoly::one();
    for mu in 0..n {
        let m = Rational::from(mu);
        for p in num {
            match p {
                HypParam::Const(a) => scalar *= a + &m,
                HypParam::Affine(f) => poly = &poly * &f.shifted(&m).to_poly(),
            }
        }
        if scalar.is_zero() {
            break;
        }
        for b in den {
            scalar /= b + &m;
        }
        scalar *= z;
        scalar /= Rational::from(mu + 1);
        sum = &sum + &poly.scale(&scalar);
    }
    Ok(sum)
}

/// Direct `sum_mu` evaluation used as an independent check on
/// [`hyp_terminating`]: each term is recomputed from scratch.
pub fn hyp_terminating_naive(num: &[Rational], den: &[Rational], z: &Rational) -> Result<Rational> {
    let first = num.first().ok_or_else(|| Error::InvalidParams("empty numerator list".into()))?;
    let n = truncation_degree(first)?;
    check_denominators(den, n)?;
    let mut sum = Rational::zero();
    for mu in 0..=n {
        let top: Rational = num.iter().map(|a| super::pochhammer(a, mu)).product();
        let bottom: Rational = den.iter().map(|b| super::pochhammer(b, mu)).product();
        sum += top / bottom * z.pow(mu as i32) / factorial(mu);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn single_term() {
        let v = hyp_terminating(&[rat(0, 1)], &[rat(1, 2)], &rat(7, 1)).unwrap();
        assert_eq!(v, Rational::one());
    }

    #[test]
    fn two_term_sum() {
        let v = hyp_terminating(&[rat(-1, 1), rat(-3, 1)], &[rat(2, 1)], &rat(1, 2)).unwrap();
        assert_eq!(v, rat(7, 4));
    }

    #[test]
    fn three_term_sum_with_negative_denominator() {
        // 1 + (-2)(-2)/(-4)*2 + [(-2)_2^2/(-4)_2]*(4/2) = 1 - 2 + (4/12)*2
        let v = hyp_terminating(&[rat(-2, 1), rat(-2, 1)], &[rat(-4, 1)], &rat(2, 1)).unwrap();
        assert_eq!(v, rat(-1, 3));
        let w = hyp_terminating_naive(&[rat(-2, 1), rat(-2, 1)], &[rat(-4, 1)], &rat(2, 1)).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn zero_denominator_inside_range_is_error() {
        let err = hyp_terminating(&[rat(-3, 1)], &[rat(-1, 1)], &Rational::one()).unwrap_err();
        assert_eq!(err, Error::ZeroDenominatorParameter { index: 0, mu: 2 });
        // -n = -2, denominator -2: (−2)_mu vanishes only at mu = 3 > 2.
        assert!(hyp_terminating(&[rat(-2, 1)], &[rat(-2, 1)], &Rational::one()).is_ok());
    }

    #[test]
    fn non_terminating_rejected() {
        assert!(matches!(
            hyp_terminating(&[rat(1, 2)], &[], &Rational::one()),
            Err(Error::NotTerminating(_))
        ));
    }

    #[test]
    fn polynomial_version_matches_pointwise() {
        // 2F1(-3, -x; 1/2; 2/5) as a polynomial in x.
        let num = [HypParam::Const(rat(-3, 1)), HypParam::Affine(AffineForm::new(rat(-1, 1), Rational::zero()))];
        let den = [rat(1, 2)];
        let z = rat(2, 5);
        let p = hyp_terminating_poly(&num, &den, &z).unwrap();
        assert_eq!(p.degree(), Some(3));
        for x in 0..6 {
            let v = hyp_terminating(&[rat(-3, 1), Rational::integer(-x)], &den, &z).unwrap();
            assert_eq!(p.eval_i64(x), v);
        }
    }
}
