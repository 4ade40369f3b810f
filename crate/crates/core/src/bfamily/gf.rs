//! Floating-point generating-function check for family B.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{b_poly_recurrence, FamilyParamsB};
use crate::afamily::rel_dev;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, poch, Rational};
use crate::su2rep::{apply_c64, coherent_components_c64, matrix_q};

/// Cap on the number of terms of a nonterminating `mF0` sum.
const MF0_MAX_TERMS: usize = 400;

/// `mF0(params; z)`, summed until a term vanishes exactly (a nonpositive
/// integer parameter) or `MF0_MAX_TERMS` is reached.
pub fn hyp_mf0_c64(params: &[f64], z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for mu in 0..MF0_MAX_TERMS {
        sum += term;
        term *= z / (mu + 1) as f64;
        for p in params {
            term *= p + mu as f64;
        }
        if term == Complex64::new(0.0, 0.0) {
            break;
        }
    }
    sum
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfRowB {
    pub k: usize,
    pub defining_sum: (f64, f64),
    pub coherent: (f64, f64),
    pub closed: (f64, f64),
    /// `M = 1` only: `(1+t)^{N-k} (1 - (1-p)/p t)^k`, `t = b eta`, `p = -ab`.
    pub krawtchouk: Option<(f64, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfReportB {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub eta: (f64, f64),
    pub rows: Vec<GfRowB>,
    pub max_dev_sum_coherent: f64,
    pub max_dev_coherent_closed: f64,
    pub max_dev_krawtchouk: Option<f64>,
}

fn pair(z: Complex64) -> (f64, f64) {
    (z.re, z.im)
}

/// Evaluates `G(k; eta)` as the defining sum `sum_n B_n(k) (eta/a)^n / n!`,
/// the coherent-state element `(Q u)_k / a^k` with `u_n = eta^n`, and the
/// closed form `sum_mu (-eta/a)^mu/mu! (-k)_mu mF0((mu-N+m)/M; (-1)^M (M eta)^M b)`.
pub fn b_generating_function_check(m: usize, n: usize, a: &Rational, b: &Rational, eta: Complex64) -> Result<GfReportB> {
    if a.is_zero() {
        return Err(Error::InvalidParams("a must be nonzero".into()));
    }
    let f = a.pow(m as i32) * b;
    let params = FamilyParamsB::new(m, f, n)?;
    let polys = b_poly_recurrence(&params, n)?;
    let q = matrix_q(n, a, b, m);
    let qu = apply_c64(&q, &coherent_components_c64(n, eta));
    let (af, bf) = (a.to_f64(), b.to_f64());
    let z = Complex64::new(if m.is_multiple_of(2) { 1.0 } else { -1.0 }, 0.0) * (m as f64 * eta).powu(m as u32) * bf;
    let mut rows = Vec::with_capacity(n + 1);
    let (mut d1, mut d2, mut d3) = (0.0f64, 0.0f64, 0.0f64);
    for (k, quk) in qu.iter().enumerate() {
        let x = eta / af;
        let defining: Complex64 = polys
            .iter()
            .enumerate()
            .map(|(i, p)| p.eval_i64(k as i64).to_f64() * x.powu(i as u32) / factorial(i).to_f64())
            .sum();
        let coherent = quk / af.powi(k as i32);
        let closed: Complex64 = (0..=k)
            .map(|mu| {
                let ps: Vec<f64> = (0..m).map(|i| (mu as f64 - n as f64 + i as f64) / m as f64).collect();
                (-x).powu(mu as u32) / factorial(mu).to_f64() * poch(-(k as i64), mu).to_f64() * hyp_mf0_c64(&ps, z)
            })
            .sum();
        let krawtchouk = (m == 1).then(|| {
            let t = eta * bf;
            let p = -af * bf;
            (1.0 + t).powu((n - k) as u32) * (1.0 - (1.0 - p) / p * t).powu(k as u32)
        });
        d1 = d1.max(rel_dev(defining, coherent));
        d2 = d2.max(rel_dev(coherent, closed));
        if let Some(kr) = krawtchouk {
            d3 = d3.max(rel_dev(coherent, kr));
        }
        rows.push(GfRowB {
            k,
            defining_sum: pair(defining),
            coherent: pair(coherent),
            closed: pair(closed),
            krawtchouk: krawtchouk.map(pair),
        });
    }
    Ok(GfReportB {
        m,
        n,
        eta: pair(eta),
        rows,
        max_dev_sum_coherent: d1,
        max_dev_coherent_closed: d2,
        max_dev_krawtchouk: (m == 1).then_some(d3),
    })
}
