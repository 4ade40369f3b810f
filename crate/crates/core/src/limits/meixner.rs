//! Contraction of the A family to Meixner polynomials under `c -> c/N^2`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{check_n_list, finite, fitted_order, pick_winner, ContractionReport};
use super::{meixner_monic, MeixnerParams};
use crate::afamily::{a_poly_recurrence, xi_poly, FamilyParamsA};
use crate::error::{Error, Result};
use crate::exactnum::{hyp_terminating, poch, Rational, UPoly};

pub const CANDIDATE1: &str = "c/(c-4)";
pub const CANDIDATE2: &str = "4c/(4c-1)";

/// `d_1 = c/(c-4)`, `None` when singular.
pub fn meixner_candidate1(c: &Rational) -> Option<Rational> {
    let den = c - Rational::integer(4);
    (!den.is_zero()).then(|| c / den)
}

/// `d_2` solving `1 - 1/d = 1/(4c)`, i.e. `4c/(4c-1)`.
pub fn meixner_candidate2(c: &Rational) -> Option<Rational> {
    let den = c * Rational::integer(4) - Rational::one();
    (!den.is_zero()).then(|| c * Rational::integer(4) / den)
}

fn max_abs_diff_f64(a: &UPoly, b: &UPoly) -> f64 {
    a.max_abs_coeff_diff(b).to_f64()
}

/// Compares `A_j^(q)(l; c/N^2, N)` with the monic Meixner polynomials
/// `M_j(l; q+1/2, d)` for both candidate values of `d`.
pub fn contract_a(q: usize, c: &Rational, j: usize, n_list: &[usize]) -> Result<ContractionReport> {
    check_n_list(n_list, 2 * j + q)?;
    let beta = Rational::new(2 * q as i64 + 1, 2);
    let target = |d: Option<Rational>| -> Result<Option<UPoly>> {
        match d {
            Some(d) => Ok(MeixnerParams::new(beta.clone(), d).ok().map(|p| meixner_monic(j, &p))),
            None => Ok(None),
        }
    };
    let t1 = target(meixner_candidate1(c))?;
    let t2 = target(meixner_candidate2(c))?;
    let polys: Vec<UPoly> = n_list
        .par_iter()
        .map(|&n| {
            let scaled = c / Rational::from(n * n);
            let params = FamilyParamsA::new(q, scaled, n)?;
            Ok(a_poly_recurrence(&params, j)?.pop().expect("nonempty"))
        })
        .collect::<Result<_>>()?;
    let devs = |t: &Option<UPoly>| -> Vec<Option<f64>> {
        polys.iter().map(|p| t.as_ref().and_then(|t| finite(max_abs_diff_f64(p, t)))).collect()
    };
    let (d1, d2) = (devs(&t1), devs(&t2));
    let (winner, order) = pick_winner(n_list, &d1, &d2, [CANDIDATE1, CANDIDATE2]);
    Ok(ContractionReport {
        target: "meixner".into(),
        n: n_list.to_vec(),
        dev_candidate1: d1,
        dev_candidate2: Some(d2),
        order,
        winner: winner.map(str::to_string),
    })
}

/// Compares the hypergeometric part
/// `2F3(-j, -l; q+1/2, (q-N)/2, (q-N+1)/2; N^2/(16c))` with
/// `2F1(-j, -l; q+1/2; 1/(4c))`.
pub fn contract_a_matrix(q: usize, c: &Rational, j: usize, l: usize, n_list: &[usize]) -> Result<ContractionReport> {
    check_n_list(n_list, 2 * j + q)?;
    if c.is_zero() {
        return Err(Error::InvalidParams("c must be nonzero".into()));
    }
    let beta = Rational::new(2 * q as i64 + 1, 2);
    let num = [Rational::integer(-(j as i64)), Rational::integer(-(l as i64))];
    let limit = hyp_terminating(&num, std::slice::from_ref(&beta), &(c * Rational::integer(4)).recip())?;
    let devs: Vec<Option<f64>> = n_list
        .par_iter()
        .map(|&n| {
            let ni = n as i64;
            let den = [beta.clone(), Rational::new(q as i64 - ni, 2), Rational::new(q as i64 - ni + 1, 2)];
            let z = Rational::from(n * n) / (c * Rational::integer(16));
            let v = hyp_terminating(&num, &den, &z)?;
            Ok(finite((v - &limit).abs().to_f64()))
        })
        .collect::<Result<_>>()?;
    let order = fitted_order(n_list, &devs);
    Ok(ContractionReport {
        target: "meixner".into(),
        n: n_list.to_vec(),
        dev_candidate1: devs,
        dev_candidate2: None,
        order,
        winner: None,
    })
}

/// Limit coefficients of the A recurrence after `c -> c/N^2`:
/// `A_{j+1} = (l - j + shift) A_j + back A_{j-1} + higher[0] A_{j-2} + higher[1] A_{j-3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedRecurrence {
    pub shift: Rational,
    pub back: Rational,
    pub higher: [Rational; 2],
}

/// `lim_{N->inf} P(N) / N^p` for a polynomial `P` of degree at most
/// `degree_bound`, read off by exact interpolation on `N = 0..=degree_bound`.
fn limit_over_power(p: impl Fn(usize) -> Rational, degree_bound: usize, power: usize) -> Result<Rational> {
    let vals: Vec<Rational> = (0..=degree_bound).map(p).collect();
    let poly = UPoly::interpolate(&vals);
    if poly.degree().is_some_and(|d| d > power) {
        return Err(Error::InvalidParams("contracted coefficient diverges".into()));
    }
    Ok(poly.coeff(power))
}

pub fn contracted_a_recurrence(q: usize, c: &Rational, j: usize) -> Result<ContractedRecurrence> {
    let n = (2 * j + q) as i64;
    let n_poly = UPoly::constant(Rational::integer(n));
    let term = |t: usize| -> Result<Rational> {
        if t > j {
            return Ok(Rational::zero());
        }
        let minus_c = -c;
        limit_over_power(
            |big_n| {
                c * minus_c.pow(t as i32)
                    * xi_poly(t, &n_poly, big_n).coeff(0)
                    * poch(-n, 2 * t)
                    * poch(big_n as i64 - n + 1, 2 * t)
            },
            4 + 2 * t,
            2 + 2 * t,
        )
    };
    let mut back = term(1)?;
    if j >= 1 {
        back += limit_over_power(|big_n| c * poch(-n, 2) * poch(big_n as i64 - n + 1, 2), 4, 2)?;
    }
    Ok(ContractedRecurrence { shift: term(0)?, back, higher: [term(2)?, term(3)?] })
}

/// Whether the contracted recurrence is the monic Meixner recurrence with
/// `beta = q + 1/2` and the given `d`, for `j = 0..=j_max`.
pub fn contracted_matches_meixner(q: usize, c: &Rational, d: &Rational, j_max: usize) -> Result<bool> {
    let m = MeixnerParams::new(Rational::new(2 * q as i64 + 1, 2), d.clone())?;
    for j in 0..=j_max {
        let r = contracted_a_recurrence(q, c, j)?;
        let shift_ok = Rational::from(j) - &r.shift == m.diag(j);
        let back_ok = -&r.back == m.off(j);
        let higher_ok = r.higher.iter().all(Rational::is_zero);
        if !(shift_ok && back_ok && higher_ok) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn candidates() {
        assert_eq!(meixner_candidate1(&rat(1, 1)), Some(rat(-1, 3)));
        assert_eq!(meixner_candidate2(&rat(1, 1)), Some(rat(4, 3)));
        assert_eq!(meixner_candidate2(&rat(1, 4)), None);
        assert_eq!(meixner_candidate1(&rat(4, 1)), None);
    }

    #[test]
    fn j0_zero_and_j1_exact() {
        let r = contract_a(0, &rat(1, 1), 0, &[8, 16]).unwrap();
        assert_eq!(r.dev_candidate1, vec![Some(0.0), Some(0.0)]);
        assert_eq!(r.winner, None);
        for c in [rat(1, 1), rat(-1, 3)] {
            let ns = [32, 64, 128];
            let r = contract_a(0, &c, 1, &ns).unwrap();
            assert_eq!(r.winner.as_deref(), Some(CANDIDATE2));
            for (n, d) in ns.iter().zip(r.dev_candidate2.as_ref().unwrap()) {
                let exact = (c.abs() * Rational::integer(2) / Rational::from(*n)).to_f64();
                assert_eq!(d.unwrap(), exact);
            }
        }
    }

    #[test]
    fn j2_order() {
        for q in 0..2 {
            let r = contract_a(q, &rat(1, 1), 2, &[32, 64, 128]).unwrap();
            assert_eq!(r.winner.as_deref(), Some(CANDIDATE2));
            let ratios: Vec<f64> = super::super::report::ratios(r.dev_candidate2.as_ref().unwrap())
                .into_iter()
                .map(Option::unwrap)
                .collect();
            assert!(ratios.iter().all(|x| (1.7..=2.3).contains(x)), "{ratios:?}");
        }
    }

    #[test]
    fn matrix_limit() {
        let r = contract_a_matrix(0, &rat(1, 1), 1, 1, &[16, 32, 64]).unwrap();
        let rat_: Vec<f64> = r.ratios().into_iter().map(Option::unwrap).collect();
        assert!(rat_.iter().all(|x| (1.7..=2.3).contains(x)), "{rat_:?}");
        let r0 = contract_a_matrix(1, &rat(1, 2), 0, 3, &[8, 16]).unwrap();
        assert_eq!(r0.dev_candidate1, vec![Some(0.0), Some(0.0)]);
    }

    #[test]
    fn matrix_limit_agrees_with_winner() {
        // 2F1(-j,-l;beta;1/(4c)) is the Meixner M_j(l; beta, d) with 1-1/d = 1/(4c)
        let c = rat(1, 1);
        let d = meixner_candidate2(&c).unwrap();
        let beta = rat(1, 2);
        let m = MeixnerParams::new(beta.clone(), d.clone()).unwrap();
        for j in 0..4usize {
            let monic = meixner_monic(j, &m);
            let lead = crate::exactnum::pochhammer(&beta, j) * (&d / (&d - Rational::one())).pow(j as i32);
            for l in 0..5i64 {
                let v = hyp_terminating(&[Rational::integer(-(j as i64)), Rational::integer(-l)], std::slice::from_ref(&beta), &(&c * Rational::integer(4)).recip()).unwrap();
                assert_eq!(monic.eval_i64(l), lead.clone() * v);
            }
        }
    }

    #[test]
    fn contracted_recurrence_is_meixner() {
        for q in 0..2 {
            for c in [rat(1, 1), rat(-3, 7), rat(5, 1), rat(1, 2)] {
                let d2 = meixner_candidate2(&c).unwrap();
                assert!(contracted_matches_meixner(q, &c, &d2, 6).unwrap());
                if let Some(d1) = meixner_candidate1(&c) {
                    assert!(!contracted_matches_meixner(q, &c, &d1, 6).unwrap());
                }
            }
        }
    }
}
