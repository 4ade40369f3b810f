use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, UPoly};

/// `(q, c, N)` for the family `A_j^(q)(l; c, N)`, `n = 2j+q`, `k = 2l+q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParamsA {
    pub q: usize,
    pub c: Rational,
    #[serde(rename = "N")]
    pub n: usize,
}

impl FamilyParamsA {
    pub fn new(q: usize, c: Rational, n: usize) -> Result<Self> {
        if q > 1 {
            return Err(Error::InvalidParams(format!("q must be 0 or 1, got {q}")));
        }
        if c.is_zero() {
            return Err(Error::InvalidParams("c must be nonzero".into()));
        }
        if n < q {
            return Err(Error::InvalidParams(format!("N={n} is smaller than q={q}")));
        }
        Ok(FamilyParamsA { q, c, n })
    }

    /// Largest admissible degree, `floor((N-q)/2)`.
    pub fn j_max(&self) -> usize {
        (self.n - self.q) / 2
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j > self.j_max() {
            return Err(Error::IndexOutOfFamily { index: j, max: self.j_max() });
        }
        Ok(())
    }

    /// Row/column index `2j+q` of the matrix element.
    pub fn index(&self, j: usize) -> usize {
        2 * j + self.q
    }

    pub fn with_c(&self, c: Rational) -> Result<Self> {
        FamilyParamsA::new(self.q, c, self.n)
    }
}

fn r(x: i64) -> Rational {
    Rational::integer(x)
}

/// `xi_t(n, N)` with `n` given as a polynomial (so `n = 2l+q` works too).
pub fn xi_poly(t: usize, n: &UPoly, big_n: usize) -> UPoly {
    let nn = r(big_n as i64);
    let k = |x: Rational| UPoly::constant(x);
    match t {
        // 2(2n-N)(2n^2-2nN-N+1)
        0 => {
            let lin = &n.scale(&r(2)) - &k(nn.clone());
            let quad = &(&(n * n).scale(&r(2)) - &n.scale(&(&nn * r(2)))) + &k(r(1) - &nn);
            (&lin * &quad).scale(&r(2))
        }
        // 4(6n^2-6n(N+2)+N^2+5N+9)
        1 => {
            let c0 = &nn * &nn + &nn * r(5) + r(9);
            (&(&(n * n).scale(&r(6)) - &n.scale(&((&nn + r(2)) * r(6)))) + &k(c0)).scale(&r(4))
        }
        // 16(2n-N-4)
        2 => (&n.scale(&r(2)) - &k(&nn + r(4))).scale(&r(16)),
        3 => k(r(16)),
        _ => UPoly::zero(),
    }
}

/// The four recurrence coefficients `xi_0..xi_3` at fixed `(n, N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiTable {
    pub xi: [Rational; 4],
}

impl XiTable {
    pub fn new(n: usize, big_n: usize) -> Self {
        let p = UPoly::constant(Rational::from(n));
        XiTable { xi: std::array::from_fn(|t| xi_poly(t, &p, big_n).coeff(0)) }
    }
}

/// Which `sigma_1` to use for the inverse-element recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sigma1 {
    /// `4[6n^2 - 6n(N-2) + N^2 - 7N + 9]`, the value that makes the
    /// recurrence hold.
    Corrected,
    /// `4[6n^2 - 6n(N+2) + N^2 - 7N + 9]` as commonly printed.
    Printed,
}

/// Coefficients `sigma_0..sigma_3` of the recurrence satisfied by the rows of
/// the inverse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaTable {
    pub sigma: [Rational; 4],
}

impl SigmaTable {
    pub fn new(n: usize, big_n: usize) -> Self {
        SigmaTable::with_variant(n, big_n, Sigma1::Corrected)
    }

    pub fn with_variant(n: usize, big_n: usize, variant: Sigma1) -> Self {
        let (n, nn) = (r(n as i64), r(big_n as i64));
        // 2(2n-N)(1+2n(n-N)-N)
        let s0 = r(2) * (r(2) * &n - &nn) * (r(1) + r(2) * &n * (&n - &nn) - &nn);
        let shift = match variant {
            Sigma1::Corrected => &nn - r(2),
            Sigma1::Printed => &nn + r(2),
        };
        let s1 = r(4) * (r(6) * &n * &n - r(6) * &n * shift + &nn * &nn - r(7) * &nn + r(9));
        let s2 = r(16) * (r(2) * &n - &nn + r(4));
        SigmaTable { sigma: [s0, s1, s2, r(16)] }
    }
}
