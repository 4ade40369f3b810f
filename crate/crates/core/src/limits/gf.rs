//! The contracted generating function of the A family.

use num_complex::Complex64;
use rayon::prelude::*;

use super::report::{check_n_list, finite, pick_winner, ContractionReport};
use crate::error::{Error, Result};
use crate::exactnum::{factorial, Rational};
use crate::su2rep::{coherent_components_c64, exp_ladder_apply_c64, Ladder};

pub const GF_NORMALIZED: &str = "(eta/sqrt a)^q";
pub const GF_PRINTED: &str = "eta^q";

/// Terminating `1F1(-l; beta; z)`.
fn hyp1f1_terminating(l: usize, beta: f64, z: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for mu in 0..l {
        let m = mu as f64;
        term *= (m - l as f64) / (beta + m) * z / (m + 1.0);
        sum += term;
    }
    sum
}

/// `G(k; eta)` at finite `N`: `a^{-q/2} (S u)_k / psi~_{k,q}` with
/// `u_n = eta^n`, `k = 2l + q`, evaluated in floating point.
pub fn gf_value(n: usize, a: f64, b: f64, eta: f64, q: usize, l: usize) -> f64 {
    let u = coherent_components_c64(n, Complex64::new(eta, 0.0));
    let step = exp_ladder_apply_c64(n, Ladder::Lower, 2, Complex64::new(b, 0.0), &u);
    let su = exp_ladder_apply_c64(n, Ladder::Raise, 2, Complex64::new(a, 0.0), &step);
    let k = 2 * l + q;
    let ground = a.powi(l as i32) * factorial(k).to_f64() / factorial(l).to_f64();
    su[k].re * a.powf(-(q as f64) / 2.0) / ground
}

/// `e^{b eta^2} (eta/sqrt a)^q 1F1(-l; q+1/2; -eta^2/(4a))`, and the same
/// with `eta^q` in place of `(eta/sqrt a)^q`.
pub fn gf_limits(a: f64, b: f64, eta: f64, q: usize, l: usize) -> (f64, f64) {
    let core = (b * eta * eta).exp() * hyp1f1_terminating(l, q as f64 + 0.5, -eta * eta / (4.0 * a));
    (core * (eta / a.sqrt()).powi(q as i32), core * eta.powi(q as i32))
}

/// Maximum over `l ∈ {0, 1, 2}` of `|G - limit|` with `a -> a/N`, `b -> b/N`,
/// `eta -> eta/sqrt(N)`. Candidate 1 is the `(eta/sqrt a)^q` form, candidate 2
/// the `eta^q` form.
pub fn contract_gf_check_with(q: usize, a: &Rational, b: &Rational, eta: f64, n_list: &[usize]) -> Result<ContractionReport> {
    if q > 1 {
        return Err(Error::InvalidParams(format!("q must be 0 or 1, got {q}")));
    }
    if a.is_zero() || a.is_negative() {
        return Err(Error::InvalidParams("a must be positive".into()));
    }
    check_n_list(n_list, 4 + q)?;
    let (af, bf) = (a.to_f64(), b.to_f64());
    let rows: Vec<(Option<f64>, Option<f64>)> = n_list
        .par_iter()
        .map(|&n| {
            let nf = n as f64;
            let (mut d1, mut d2) = (0.0f64, 0.0f64);
            for l in 0..3 {
                let g = gf_value(n, af / nf, bf / nf, eta / nf.sqrt(), q, l);
                let (t1, t2) = gf_limits(af, bf, eta, q, l);
                d1 = d1.max((g - t1).abs());
                d2 = d2.max((g - t2).abs());
            }
            (finite(d1), finite(d2))
        })
        .collect();
    let (d1, d2): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let (winner, order) = pick_winner(n_list, &d1, &d2, [GF_NORMALIZED, GF_PRINTED]);
    Ok(ContractionReport {
        target: "gf".into(),
        n: n_list.to_vec(),
        dev_candidate1: d1,
        dev_candidate2: Some(d2),
        order,
        winner: winner.map(str::to_string),
    })
}

/// [`contract_gf_check_with`] at `(a, b) = (1, c)`.
pub fn contract_gf_check(q: usize, c: &Rational, eta: f64, n_list: &[usize]) -> Result<ContractionReport> {
    contract_gf_check_with(q, &Rational::one(), c, eta, n_list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn eta_zero() {
        for q in 0..2 {
            let r = contract_gf_check(q, &rat(1, 4), 0.0, &[16, 32]).unwrap();
            assert!(r.dev_candidate1.iter().all(|d| d.unwrap() < 1e-12), "{r:?}");
        }
        assert_eq!(gf_limits(1.0, 0.25, 0.0, 0, 0).0, 1.0);
        assert_eq!(gf_limits(1.0, 0.25, 0.0, 1, 0).0, 0.0);
    }

    #[test]
    fn decreasing_deviation() {
        for q in 0..2 {
            let r = contract_gf_check(q, &rat(1, 4), 0.5, &[16, 32, 64]).unwrap();
            let d: Vec<f64> = r.dev_candidate1.iter().map(|x| x.unwrap()).collect();
            assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
        }
    }

    #[test]
    fn general_a_prefers_normalized_form() {
        let r = contract_gf_check_with(1, &rat(2, 1), &rat(-3, 10), 0.8, &[16, 32, 64, 128]).unwrap();
        assert_eq!(r.winner.as_deref(), Some(GF_NORMALIZED));
    }
}
