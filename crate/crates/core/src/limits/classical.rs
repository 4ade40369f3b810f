//! Meixner, Krawtchouk and Hermite polynomials in exact arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, hyp_terminating, hyp_terminating_poly, poch, pochhammer, AffineForm, HypParam, Rational, UPoly};

/// `M_n(x; beta, d)` parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeixnerParams {
    pub beta: Rational,
    pub d: Rational,
}

impl MeixnerParams {
    pub fn new(beta: Rational, d: Rational) -> Result<Self> {
        if d.is_zero() || d.is_one() {
            return Err(Error::InvalidParams(format!("Meixner d must differ from 0 and 1, got {d}")));
        }
        Ok(MeixnerParams { beta, d })
    }

    /// `(n + (n+beta) d) / (1-d)`.
    pub fn diag(&self, n: usize) -> Rational {
        let nr = Rational::from(n);
        (&nr + (&nr + &self.beta) * &self.d) / (Rational::one() - &self.d)
    }

    /// `n (n+beta-1) d / (1-d)^2`.
    pub fn off(&self, n: usize) -> Rational {
        let nr = Rational::from(n);
        let one_m = Rational::one() - &self.d;
        &nr * (&nr + &self.beta - Rational::one()) * &self.d / (&one_m * &one_m)
    }
}

/// Monic Meixner polynomials `0..=n_max` from
/// `x B_n = B_{n+1} + diag(n) B_n + off(n) B_{n-1}`.
pub fn meixner_monic_all(n_max: usize, params: &MeixnerParams) -> Vec<UPoly> {
    let mut out = vec![UPoly::one()];
    for n in 0..n_max {
        let mut next = &(&UPoly::x() - &UPoly::constant(params.diag(n))) * &out[n];
        if n >= 1 {
            next = &next - &out[n - 1].scale(&params.off(n));
        }
        out.push(next);
    }
    out
}

pub fn meixner_monic(n: usize, params: &MeixnerParams) -> UPoly {
    meixner_monic_all(n, params).pop().expect("nonempty")
}

/// `(beta)_n (d/(d-1))^n 2F1(-n, -x; beta; 1 - 1/d)`, the monic normalization of
/// the hypergeometric Meixner polynomial.
pub fn meixner_monic_hypergeometric(n: usize, params: &MeixnerParams) -> Result<UPoly> {
    let num = [HypParam::Const(Rational::integer(-(n as i64))), HypParam::Affine(AffineForm::from_ints(-1, 0))];
    let z = Rational::one() - params.d.recip();
    let series = hyp_terminating_poly(&num, std::slice::from_ref(&params.beta), &z)?;
    let lead = pochhammer(&params.beta, n) * (&params.d / (&params.d - Rational::one())).pow(n as i32);
    Ok(series.scale(&lead))
}

/// `K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)` as a polynomial in `x`.
pub fn krawtchouk_poly(n: usize, p: &Rational, big_n: usize) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::InvalidParams("Krawtchouk p must be nonzero".into()));
    }
    let num = [HypParam::Const(Rational::integer(-(n as i64))), HypParam::Affine(AffineForm::from_ints(-1, 0))];
    hyp_terminating_poly(&num, &[Rational::integer(-(big_n as i64))], &p.recip())
}

pub fn krawtchouk(n: usize, x: &Rational, p: &Rational, big_n: usize) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::InvalidParams("Krawtchouk p must be nonzero".into()));
    }
    let num = [Rational::integer(-(n as i64)), -x];
    hyp_terminating(&num, &[Rational::integer(-(big_n as i64))], &p.recip())
}

/// `H_n(x) = (2x)^n 2F0(-n/2, -(n-1)/2; ; -1/x^2)`; at `x = 0` the
/// three-term recurrence is used instead.
pub fn hermite(n: usize, x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Ok(hermite_poly(n).eval(x));
    }
    let a = Rational::new(-(n as i64), 2);
    let b = Rational::new(1 - n as i64, 2);
    // the integer-valued parameter terminates the series and must come first
    let num = if a.is_integer() { [a, b] } else { [b, a] };
    let s = hyp_terminating(&num, &[], &-(x * x).recip())?;
    Ok((x * Rational::integer(2)).pow(n as i32) * s)
}

/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite_poly(n: usize) -> UPoly {
    let two_x = UPoly::from_ints(&[0, 2]);
    let mut prev = UPoly::zero();
    let mut cur = UPoly::one();
    for m in 0..n {
        let next = &(&two_x * &cur) - &prev.scale(&Rational::from(2 * m));
        prev = cur;
        cur = next;
    }
    cur
}

/// `sum_x C(N,x) p^x (1-p)^{N-x} K_m K_n = (-1)^n n!/(-N)_n ((1-p)/p)^n delta_{mn}`
/// for every `m, n ≤ N`. Returns the first failing `(m, n)`.
pub fn krawtchouk_orthogonality(big_n: usize, p: &Rational) -> Result<Option<(usize, usize)>> {
    if p.is_one() {
        return Err(Error::InvalidParams("Krawtchouk orthogonality needs p != 1".into()));
    }
    let polys: Vec<UPoly> = (0..=big_n).map(|n| krawtchouk_poly(n, p, big_n)).collect::<Result<_>>()?;
    let q = Rational::one() - p;
    let w: Vec<Rational> =
        (0..=big_n).map(|x| binomial(big_n, x) * p.pow(x as i32) * q.pow((big_n - x) as i32)).collect();
    let vals: Vec<Vec<Rational>> =
        polys.iter().map(|k| (0..=big_n).map(|x| k.eval_i64(x as i64)).collect()).collect();
    for m in 0..=big_n {
        for n in 0..=big_n {
            let lhs: Rational = (0..=big_n).map(|x| &w[x] * &vals[m][x] * &vals[n][x]).sum();
            let rhs = if m == n {
                let sign = Rational::integer(if n % 2 == 0 { 1 } else { -1 });
                sign * factorial(n) / poch(-(big_n as i64), n) * (&q / p).pow(n as i32)
            } else {
                Rational::zero()
            };
            if lhs != rhs {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn meixner_examples() {
        let p = MeixnerParams::new(rat(1, 2), rat(1, 3)).unwrap();
        assert_eq!(meixner_monic(0, &p), UPoly::one());
        // x - beta d/(1-d)
        assert_eq!(meixner_monic(1, &p), UPoly::new(vec![rat(-1, 4), rat(1, 1)]));
        for n in 0..=8 {
            assert_eq!(meixner_monic_hypergeometric(n, &p).unwrap(), meixner_monic(n, &p));
        }
        assert!(MeixnerParams::new(rat(1, 2), rat(1, 1)).is_err());
    }

    #[test]
    fn krawtchouk_and_hermite_values() {
        let p = rat(1, 3);
        assert_eq!(krawtchouk(0, &rat(2, 1), &p, 5).unwrap(), Rational::one());
        for n in 0..=5 {
            assert_eq!(krawtchouk(n, &Rational::zero(), &p, 5).unwrap(), Rational::one());
            assert_eq!(krawtchouk_poly(n, &p, 5).unwrap().eval_i64(3), krawtchouk(n, &rat(3, 1), &p, 5).unwrap());
        }
        assert_eq!(hermite(0, &rat(3, 2)).unwrap(), Rational::one());
        assert_eq!(hermite_poly(2), UPoly::from_ints(&[-2, 0, 4]));
        for n in 0..=9 {
            for x in [rat(3, 2), rat(-1, 3), rat(0, 1)] {
                assert_eq!(hermite(n, &x).unwrap(), hermite_poly(n).eval(&x), "n={n}");
            }
        }
    }

    #[test]
    fn krawtchouk_orthogonal() {
        for big_n in 0..=8 {
            for p in [rat(1, 2), rat(-1, 3), rat(5, 2)] {
                assert_eq!(krawtchouk_orthogonality(big_n, &p).unwrap(), None);
            }
        }
    }
}
