//! Floating-point generating-function check for family A.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{a_poly_recurrence, FamilyParamsA};
use crate::error::Result;
use crate::exactnum::{factorial, Rational};
use crate::su2rep::{apply_c64, coherent_components_c64, matrix_s};

/// `|x - y| / max(|x|, |y|)`, zero when both vanish.
pub fn rel_dev(x: Complex64, y: Complex64) -> f64 {
    let scale = x.norm().max(y.norm());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).norm() / scale
    }
}

/// Physicists' Hermite polynomials `H_0..H_n` at a complex point.
pub fn hermite_c64(n: usize, z: Complex64) -> Vec<Complex64> {
    let mut h = vec![Complex64::new(1.0, 0.0)];
    if n >= 1 {
        h.push(2.0 * z);
    }
    for m in 1..n {
        let next = 2.0 * z * h[m] - 2.0 * m as f64 * h[m - 1];
        h.push(next);
    }
    h
}

fn csqrt(x: &Rational) -> Complex64 {
    Complex64::new(x.to_f64(), 0.0).sqrt()
}

/// One value of `G` per column index `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfRow {
    pub k: usize,
    pub defining_sum: (f64, f64),
    pub coherent: (f64, f64),
    /// `None` at `eta = 0`, where the Hermite form is undefined.
    pub hermite: Option<(f64, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub eta: (f64, f64),
    pub rows: Vec<GfRow>,
    pub max_dev_sum_coherent: f64,
    pub max_dev_coherent_closed: Option<f64>,
}

fn pair(z: Complex64) -> (f64, f64) {
    (z.re, z.im)
}

/// Evaluates `G(k; eta)` for `k = 2l+q`, `0 ≤ k ≤ N`, three ways:
/// the defining sum `sum_j A_j(l) (eta/sqrt a)^n / n!`, the coherent-state
/// matrix element `a^{-q/2} (S u)_k / psi~_{k,q}` with `u_n = eta^n`, and the
/// Hermite sum
/// `i^{N+q} (-eta sqrt b)^N sum_m c^{-(2m+q)/2}/(2m+q)! (-l)_m H_{N-2m-q}(i/(2 eta sqrt b))`.
pub fn a_generating_function_check(n: usize, a: &Rational, b: &Rational, eta: Complex64) -> Result<GfReport> {
    let c = a * b;
    let s = matrix_s(n, a, b);
    let su = apply_c64(&s, &coherent_components_c64(n, eta));
    let (sa, sb) = (csqrt(a), csqrt(b));
    let sc = sa * sb;
    let i = Complex64::new(0.0, 1.0);
    let mut rows = Vec::with_capacity(n + 1);
    let (mut dev1, mut dev2) = (0.0f64, 0.0f64);
    for q in 0..2usize.min(n + 1) {
        let params = FamilyParamsA::new(q, c.clone(), n)?;
        let polys = a_poly_recurrence(&params, params.j_max())?;
        let herm = (eta != Complex64::new(0.0, 0.0)).then(|| hermite_c64(n, i / (2.0 * eta * sb)));
        for l in 0..=params.j_max() {
            let k = 2 * l + q;
            let x = eta / sa;
            let defining: Complex64 = polys
                .iter()
                .enumerate()
                .map(|(j, p)| {
                    let m = 2 * j + q;
                    p.eval_i64(l as i64).to_f64() * x.powu(m as u32) / factorial(m).to_f64()
                })
                .sum();
            let ground = crate::afamily::ground_state_a(a, q, l).to_f64();
            let coherent = su[k] * sa.powi(-(q as i32)) / ground;
            let hermite = herm.as_ref().map(|h| {
                let sum: Complex64 = (0..=params.j_max())
                    .map(|m| {
                        let e = 2 * m + q;
                        let poch = crate::exactnum::poch(-(l as i64), m).to_f64();
                        sc.powi(-(e as i32)) / factorial(e).to_f64() * poch * h[n - e]
                    })
                    .sum();
                i.powu((n + q) as u32) * (-eta * sb).powu(n as u32) * sum
            });
            dev1 = dev1.max(rel_dev(defining, coherent));
            if let Some(hv) = hermite {
                dev2 = dev2.max(rel_dev(coherent, hv));
            }
            rows.push(GfRow { k, defining_sum: pair(defining), coherent: pair(coherent), hermite: hermite.map(pair) });
        }
    }
    rows.sort_by_key(|r| r.k);
    let closed = rows.iter().all(|r| r.hermite.is_some());
    Ok(GfReport {
        n,
        eta: pair(eta),
        rows,
        max_dev_sum_coherent: dev1,
        max_dev_coherent_closed: closed.then_some(dev2),
    })
}
