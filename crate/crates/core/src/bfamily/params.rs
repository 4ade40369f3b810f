use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{poch, Rational};

/// `(M, f, N)` for the family `B_n(k; f, N)`, `f = a^M b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParamsB {
    #[serde(rename = "M")]
    pub m: usize,
    pub f: Rational,
    #[serde(rename = "N")]
    pub n: usize,
}

impl FamilyParamsB {
    pub fn new(m: usize, f: Rational, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("M must be at least 1".into()));
        }
        if f.is_zero() {
            return Err(Error::InvalidParams("f must be nonzero".into()));
        }
        Ok(FamilyParamsB { m, f, n })
    }

    pub fn check_index(&self, n: usize) -> Result<()> {
        if n > self.n {
            return Err(Error::IndexOutOfFamily { index: n, max: self.n });
        }
        Ok(())
    }

    /// `n = M j + q` with `0 ≤ q < M`, returned as `(j, q)`.
    pub fn residue(&self, n: usize) -> (usize, usize) {
        (n / self.m, n % self.m)
    }

    /// Order `d = 2M - 1` of the vector orthogonality.
    pub fn d(&self) -> usize {
        2 * self.m - 1
    }

    pub fn with_f(&self, f: Rational) -> Result<Self> {
        FamilyParamsB::new(self.m, f, self.n)
    }
}

/// The three recurrence coefficients at fixed `(n, N)`:
/// `zeta_M = (-1)^M M (-n)_M (N-n+1)_M`,
/// `zeta_{M-1} = (-1)^M M (-n)_{M-1} (N-n+1)_{M-1} (2n-M-N+1)`,
/// `zeta_{2M-1} = -M^2 (-n)_{2M-1} (N-n+1)_{2M-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaTable {
    pub zeta_m: Rational,
    pub zeta_m1: Rational,
    pub zeta_2m1: Rational,
}

impl ZetaTable {
    pub fn new(m: usize, n: usize, big_n: usize) -> Self {
        let (mi, ni, bn) = (m as i64, n as i64, big_n as i64);
        let sign = Rational::integer(if m.is_multiple_of(2) { 1 } else { -1 });
        let mm = Rational::integer(mi);
        let zeta_m = &sign * &mm * poch(-ni, m) * poch(bn - ni + 1, m);
        let zeta_m1 =
            &sign * &mm * poch(-ni, m - 1) * poch(bn - ni + 1, m - 1) * Rational::integer(2 * ni - mi - bn + 1);
        let zeta_2m1 = -(&mm * &mm) * poch(-ni, 2 * m - 1) * poch(bn - ni + 1, 2 * m - 1);
        ZetaTable { zeta_m, zeta_m1, zeta_2m1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn residues_unique() {
        let p = FamilyParamsB::new(3, rat(1, 3), 10).unwrap();
        for n in 0..=10 {
            let (j, q) = p.residue(n);
            assert!(q < 3);
            assert_eq!(3 * j + q, n);
        }
        assert_eq!(p.d(), 5);
    }

    #[test]
    fn zeta_values() {
        // M=1, n=0: zeta_0 = -(N+1-1+... ) reduces to N
        let z = ZetaTable::new(1, 0, 5);
        assert_eq!(z.zeta_m1, Rational::integer(5));
        assert_eq!(z.zeta_m, Rational::zero());
        let z = ZetaTable::new(2, 3, 6);
        assert_eq!(z.zeta_m, Rational::integer(2) * poch(-3, 2) * poch(4, 2));
        assert_eq!(z.zeta_2m1, Rational::integer(-4) * poch(-3, 3) * poch(4, 3));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(FamilyParamsB::new(0, rat(1, 1), 3).is_err());
        assert!(FamilyParamsB::new(2, rat(0, 1), 3).is_err());
    }
}
