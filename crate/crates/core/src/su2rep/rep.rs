//! The (N+1)-dimensional irrep in the basis `f_n = sqrt(C(N,n)) |N,n>`, where
//! every ladder entry is an integer.

use serde::{Deserialize, Serialize};

use super::RationalMatrix;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepMatrices {
    #[serde(rename = "N")]
    pub n: usize,
    pub jp: RationalMatrix,
    pub jm: RationalMatrix,
    pub j0: RationalMatrix,
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn identity(&self) -> RationalMatrix {
        RationalMatrix::identity(self.dim())
    }

    /// `J0 + N/2 = diag(0, 1, ..., N)`.
    pub fn number_op(&self) -> RationalMatrix {
        RationalMatrix::diagonal((0..=self.n).map(Rational::from).collect())
    }

    /// Residuals of `[J+,J-] = 2J0`, `[J0,J+] = J+`, `[J0,J-] = -J-`.
    pub fn commutation_holds(&self) -> bool {
        self.jp.commutator(&self.jm) == self.j0.scale(&Rational::integer(2))
            && self.j0.commutator(&self.jp) == self.jp
            && self.j0.commutator(&self.jm) == -&self.jm
    }
}

/// Ladder matrices: `(J+)_{n+1,n} = n+1`, `(J-)_{n-1,n} = N-n+1`,
/// `(J0)_{n,n} = n - N/2`.
pub fn build_rep(n: usize) -> RepMatrices {
    let dim = n + 1;
    let mut jp = RationalMatrix::zeros(dim, dim);
    let mut jm = RationalMatrix::zeros(dim, dim);
    for i in 0..n {
        jp.set(i + 1, i, Rational::from(i + 1));
    }
    for i in 1..=n {
        jm.set(i - 1, i, Rational::from(n - i + 1));
    }
    let half = Rational::new(n as i64, 2);
    let j0 = RationalMatrix::diagonal((0..=n).map(|i| Rational::from(i) - &half).collect());
    let rep = RepMatrices { n, jp, jm, j0 };
    assert!(rep.commutation_holds(), "su(2) relations fail for N={n}");
    rep
}

/// `sum_{k<dim} X^k / k!` for nilpotent `X`.
pub fn exp_nilpotent(x: &RationalMatrix) -> Result<RationalMatrix> {
    if !x.is_square() {
        return Err(Error::Dimension("exp of a non-square matrix".into()));
    }
    let dim = x.rows();
    let mut out = RationalMatrix::identity(dim);
    let mut term = RationalMatrix::identity(dim);
    for k in 1..=dim {
        term = term.matmul(x).scale(&Rational::from(k).recip());
        if term.is_zero() {
            return Ok(out);
        }
        if k == dim {
            // X^dim != 0
            return Err(Error::NotNilpotent { dim });
        }
        out = &out + &term;
    }
    Ok(out)
}

fn exp_ladder(x: &RationalMatrix) -> RationalMatrix {
    exp_nilpotent(x).expect("ladder polynomials are nilpotent")
}

/// `exp(a J+^2) exp(b J-^2)` in the rationalized basis.
pub fn matrix_s(n: usize, a: &Rational, b: &Rational) -> RationalMatrix {
    let r = build_rep(n);
    let jp2 = r.jp.pow(2);
    let jm2 = r.jm.pow(2);
    exp_ladder(&jp2.scale(a)).matmul(&exp_ladder(&jm2.scale(b)))
}

/// `exp(-b J-^2) exp(-a J+^2)`.
pub fn matrix_s_inverse(n: usize, a: &Rational, b: &Rational) -> RationalMatrix {
    let r = build_rep(n);
    let jp2 = r.jp.pow(2);
    let jm2 = r.jm.pow(2);
    exp_ladder(&jm2.scale(&-b)).matmul(&exp_ladder(&jp2.scale(&-a)))
}

/// `exp(a J+) exp(b J-^M)`.
pub fn matrix_q(n: usize, a: &Rational, b: &Rational, m: usize) -> RationalMatrix {
    assert!(m >= 1, "M must be positive");
    let r = build_rep(n);
    exp_ladder(&r.jp.scale(a)).matmul(&exp_ladder(&r.jm.pow(m).scale(b)))
}

/// `exp(-b J-^M) exp(-a J+)`.
pub fn matrix_q_inverse(n: usize, a: &Rational, b: &Rational, m: usize) -> RationalMatrix {
    assert!(m >= 1, "M must be positive");
    let r = build_rep(n);
    exp_ladder(&r.jm.pow(m).scale(&-b)).matmul(&exp_ladder(&r.jp.scale(&-a)))
}

/// `C(N,k) / C(N,n)`: squared factor converting a rationalized element
/// `X~_{k,n}` to the unitary one, `X_{k,n}^2 = X~_{k,n}^2 * C(N,k)/C(N,n)`.
pub fn basis_ratio(n_rep: usize, k: usize, n: usize) -> Rational {
    binomial(n_rep, k) / binomial(n_rep, n)
}

/// Applies the reflection `X_{n,k} = Y_{N-k,N-n} * C(N,k)/C(N,n)`, i.e. the
/// rationalized form of `chi_{n,k} = psi*_{N-k,N-n}`.
pub fn reflect(y: &RationalMatrix) -> RationalMatrix {
    let n_rep = y.rows() - 1;
    RationalMatrix::from_fn(y.rows(), y.cols(), |n, k| y.get(n_rep - k, n_rep - n) * basis_ratio(n_rep, k, n))
}

/// `(J+^k)_{n+k,n} = (n+1)_k` and `(J-^k)_{n-k,n} = (N-n+1)_k`, all other
/// entries zero.
pub fn ladder_power_law_holds(rep: &RepMatrices, k: usize) -> bool {
    let n_rep = rep.n;
    let pk = rep.jp.pow(k);
    let mk = rep.jm.pow(k);
    let expect_p = RationalMatrix::from_fn(n_rep + 1, n_rep + 1, |r, c| {
        if r == c + k {
            factorial(c + k) / factorial(c)
        } else {
            Rational::zero()
        }
    });
    let expect_m = RationalMatrix::from_fn(n_rep + 1, n_rep + 1, |r, c| {
        if c >= k && r == c - k {
            crate::exactnum::poch((n_rep - c + 1) as i64, k)
        } else {
            Rational::zero()
        }
    });
    pk == expect_p && mk == expect_m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn rep_small_cases() {
        let r0 = build_rep(0);
        assert!(r0.jp.is_zero() && r0.jm.is_zero() && r0.j0.is_zero());
        let r1 = build_rep(1);
        assert_eq!(r1.jp.get(1, 0), &Rational::one());
        assert_eq!(r1.jm.get(0, 1), &Rational::one());
        assert_eq!(r1.j0, RationalMatrix::diagonal(vec![rat(-1, 2), rat(1, 2)]));
        let r2 = build_rep(2);
        assert_eq!(r2.jp.get(1, 0), &rat(1, 1));
        assert_eq!(r2.jp.get(2, 1), &rat(2, 1));
        assert_eq!(r2.jm.get(0, 1), &rat(2, 1));
        assert_eq!(r2.jm.get(1, 2), &rat(1, 1));
        assert_eq!(r2.j0, RationalMatrix::diagonal(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn nilpotency_and_powers() {
        for n in 0..9 {
            let r = build_rep(n);
            assert!(r.jp.pow(n + 1).is_zero());
            assert!(r.jm.pow(n + 1).is_zero());
            for k in 0..=n {
                assert!(ladder_power_law_holds(&r, k));
            }
        }
    }

    #[test]
    fn exp_of_zero_and_two_term_series() {
        assert!(exp_nilpotent(&RationalMatrix::zeros(4, 4)).unwrap().is_identity());
        let r = build_rep(2);
        let jp2 = r.jp.pow(2);
        assert_eq!(jp2.get(2, 0), &rat(2, 1));
        let a = rat(3, 5);
        let x = jp2.scale(&a);
        assert_eq!(exp_nilpotent(&x).unwrap(), &RationalMatrix::identity(3) + &x);
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let x = RationalMatrix::identity(2);
        assert_eq!(exp_nilpotent(&x), Err(Error::NotNilpotent { dim: 2 }));
    }

    #[test]
    fn s_small_entries() {
        let (a, b) = (rat(2, 3), rat(-5, 7));
        let s = matrix_s(2, &a, &b);
        assert_eq!(s.get(0, 0), &Rational::one());
        assert_eq!(s.get(1, 1), &Rational::one());
        // unitary psi_{2,0} = psi~_{2,0} * sqrt(C(2,2)/C(2,0)) = 2a
        assert_eq!(s.get(2, 0) * s.get(2, 0) * basis_ratio(2, 2, 0), (&a * rat(2, 1)).pow(2));
        assert_eq!(s.get(0, 2) * s.get(0, 2) * basis_ratio(2, 0, 2), (&b * rat(2, 1)).pow(2));
        assert_eq!(s.get(2, 2), &(Rational::one() + rat(4, 1) * &a * &b));
        assert!(matrix_s(5, &Rational::zero(), &Rational::zero()).is_identity());
    }

    #[test]
    fn q_small_entries() {
        let (a, b) = (rat(1, 2), rat(3, 1));
        let q = matrix_q(1, &a, &b, 1);
        let expect = RationalMatrix::from_rows(vec![
            vec![Rational::one(), b.clone()],
            vec![a.clone(), Rational::one() + &a * &b],
        ])
        .unwrap();
        assert_eq!(q, expect);
        let r = build_rep(3);
        assert_eq!(matrix_q(3, &a, &b, 5), exp_nilpotent(&r.jp.scale(&a)).unwrap());
        assert!(matrix_q(4, &Rational::zero(), &Rational::zero(), 2).is_identity());
    }

    #[test]
    fn inverses_and_reflection() {
        let (a, b) = (rat(2, 1), rat(1, 3));
        for n in 0..9 {
            let s = matrix_s(n, &a, &b);
            let si = matrix_s_inverse(n, &a, &b);
            assert!(si.matmul(&s).is_identity());
            assert_eq!(si, reflect(&matrix_s(n, &-&a, &-&b)));
            for m in 1..=3 {
                let q = matrix_q(n, &a, &b, m);
                let qi = matrix_q_inverse(n, &a, &b, m);
                assert!(qi.matmul(&q).is_identity());
                assert_eq!(qi, reflect(&matrix_q(n, &-&a, &-&b, m)));
            }
        }
    }

    #[test]
    fn parity_vanishing() {
        let s = matrix_s(7, &rat(3, 2), &rat(-1, 4));
        for k in 0..8 {
            for n in 0..8 {
                if (k + n) % 2 == 1 {
                    assert!(s.get(k, n).is_zero());
                }
            }
        }
    }
}
