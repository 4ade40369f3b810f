//! Unnormalized coherent states.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{build_rep, RepMatrices};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, pochhammer, Rational};

/// Coherent state `|N, eta>` without its normalization.
///
/// `components[n] = eta^n` are the coordinates on the rationalized basis
/// `f_n = sqrt(C(N,n)) |N,n>`; `dual_components[n] = C(N,n) eta^n` are the
/// coordinates on the dual basis `|N,n> / sqrt(C(N,n))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherentVector {
    #[serde(rename = "N")]
    pub n: usize,
    pub eta: Rational,
    pub components: Vec<Rational>,
    pub dual_components: Vec<Rational>,
}

pub fn coherent_vector(n: usize, eta: &Rational) -> CoherentVector {
    let components: Vec<Rational> = (0..=n).map(|i| eta.pow(i as i32)).collect();
    let dual_components = components.iter().enumerate().map(|(i, c)| binomial(n, i) * c).collect();
    let v = CoherentVector { n, eta: eta.clone(), components, dual_components };
    if !eta.is_zero() {
        assert!(v.check_actions(&build_rep(n)).is_ok(), "coherent relations fail for N={n}");
    }
    v
}

impl CoherentVector {
    /// Checks `J+ v = eta^-1 Nop v` and `J- v = eta (N - Nop) v` where
    /// `Nop = J0 + N/2`. The `J+` relation needs `eta != 0`.
    pub fn check_actions(&self, rep: &RepMatrices) -> Result<()> {
        let v = &self.components;
        let jm_v = rep.jm.mul_vec(v);
        let expect_m: Vec<Rational> = v
            .iter()
            .enumerate()
            .map(|(i, x)| &self.eta * Rational::from(self.n - i) * x)
            .collect();
        if jm_v != expect_m {
            return Err(Error::IdentityFailure { name: "J- |eta>".into(), residual: format!("{jm_v:?}") });
        }
        if self.eta.is_zero() {
            return Err(Error::EtaZero);
        }
        let jp_v = rep.jp.mul_vec(v);
        let inv = self.eta.recip();
        let expect_p: Vec<Rational> = v.iter().enumerate().map(|(i, x)| &inv * Rational::from(i) * x).collect();
        if jp_v != expect_p {
            return Err(Error::IdentityFailure { name: "J+ |eta>".into(), residual: format!("{jp_v:?}") });
        }
        Ok(())
    }

    /// `J+^k v = (-1)^k eta^-k (-Nop)_k v` and `J-^k v = (-1)^k eta^k (Nop - N)_k v`.
    pub fn check_power_actions(&self, rep: &RepMatrices, k: usize) -> Result<()> {
        if self.eta.is_zero() {
            return Err(Error::EtaZero);
        }
        let v = &self.components;
        let sign = if k.is_multiple_of(2) { Rational::one() } else { Rational::integer(-1) };
        let ek = self.eta.pow(k as i32);
        let lhs_p = rep.jp.pow(k).mul_vec(v);
        let rhs_p: Vec<Rational> = v
            .iter()
            .enumerate()
            .map(|(i, x)| &sign / &ek * pochhammer(&Rational::integer(-(i as i64)), k) * x)
            .collect();
        let lhs_m = rep.jm.pow(k).mul_vec(v);
        let rhs_m: Vec<Rational> = v
            .iter()
            .enumerate()
            .map(|(i, x)| &sign * &ek * pochhammer(&Rational::integer(i as i64 - self.n as i64), k) * x)
            .collect();
        if lhs_p != rhs_p || lhs_m != rhs_m {
            return Err(Error::IdentityFailure { name: format!("J±^{k} |eta>"), residual: String::new() });
        }
        Ok(())
    }
}

/// `u_n = eta^n` in floating point.
pub fn coherent_components_c64(n: usize, eta: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..=n {
        out.push(p);
        p *= eta;
    }
    out
}
