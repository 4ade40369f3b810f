//! Contraction of the B matrix elements under `a -> a/sqrt(N)`,
//! `b -> b/N^{M/2}`.

use rayon::prelude::*;

use super::report::{check_n_list, finite, fitted_order, ContractionReport};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, Rational};

fn rising(x: f64, k: usize) -> f64 {
    (0..k).map(|i| x + i as f64).product()
}

fn fact(n: usize) -> f64 {
    rising(1.0, n)
}

/// Unitary `phi_{k,n}` of `exp(a J+) exp(b J-^M)` in floating point:
/// `sqrt(C(N,k)/C(N,n)) sum_r b^r/r! (N-n+1)_{Mr} a^s/s! (n-Mr+1)_s`, `s = k-n+Mr`.
pub fn phi_unitary_f64(big_n: usize, m: usize, a: f64, b: f64, k: usize, n: usize) -> f64 {
    let mut total = 0.0;
    let mut r = 0;
    while m * r <= n {
        let low = n - m * r;
        if k >= low {
            let s = k - low;
            total += b.powi(r as i32) / fact(r) * rising((big_n - n + 1) as f64, m * r) * a.powi(s as i32) / fact(s)
                * rising((low + 1) as f64, s);
        }
        r += 1;
    }
    let ratio = (binomial(big_n, k) / binomial(big_n, n)).to_f64();
    total * ratio.sqrt()
}

/// Terminating `pFq(-j, num; den; z)` in floating point.
fn hyp_f64(j: usize, num: &[f64], den: &[f64], z: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for mu in 0..j {
        let m = mu as f64;
        term *= (m - j as f64) * z / (m + 1.0);
        for a in num {
            term *= a + m;
        }
        for b in den {
            term /= b + m;
        }
        sum += term;
    }
    sum
}

/// `a^{k-q} b^j / (j! (k-q)! q!) sqrt(k! n!)
///  1+MF_{M-1}(-j, alpha; beta; (-1)^{M+1}/(a^M b))`, zero when `k < q`.
pub fn charlier_limit(m: usize, a: f64, b: f64, j: usize, q: usize, k: usize) -> f64 {
    if k < q {
        return 0.0;
    }
    let n = m * j + q;
    let mf = m as f64;
    let alpha: Vec<f64> = (0..m).map(|i| (q as f64 - k as f64 + i as f64) / mf).collect();
    let beta: Vec<f64> = (0..m).filter(|i| q + i + 1 != m).map(|i| (q + i + 1) as f64 / mf).collect();
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let z = sign / (a.powi(m as i32) * b);
    a.powi((k - q) as i32) * b.powi(j as i32) / (fact(j) * fact(k - q) * fact(q)) * (fact(k) * fact(n)).sqrt()
        * hyp_f64(j, &alpha, &beta, z)
}

/// Deviation `|phi_{k,n}(a/sqrt N, b/N^{M/2}) - limit|` along `n_list`,
/// `n = Mj + q`.
pub fn contract_b(
    m: usize,
    a: &Rational,
    b: &Rational,
    j: usize,
    q: usize,
    k: usize,
    n_list: &[usize],
) -> Result<ContractionReport> {
    if m == 0 || q >= m {
        return Err(Error::InvalidParams(format!("need M >= 1 and q < M, got M={m}, q={q}")));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidParams("a and b must be nonzero".into()));
    }
    let n = m * j + q;
    check_n_list(n_list, n.max(k))?;
    let (af, bf) = (a.to_f64(), b.to_f64());
    let limit = charlier_limit(m, af, bf, j, q, k);
    let devs: Vec<Option<f64>> = n_list
        .par_iter()
        .map(|&big_n| {
            let nf = big_n as f64;
            let v = phi_unitary_f64(big_n, m, af / nf.sqrt(), bf / nf.powf(m as f64 / 2.0), k, n);
            finite((v - limit).abs())
        })
        .collect();
    let order = fitted_order(n_list, &devs);
    Ok(ContractionReport {
        target: "charlier".into(),
        n: n_list.to_vec(),
        dev_candidate1: devs,
        dev_candidate2: None,
        order,
        winner: None,
    })
}
