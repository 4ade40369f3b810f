//! JSON and CSV family dumps.

use serde::{Deserialize, Serialize};

use super::{a_poly_recurrence, FamilyParamsA};
use crate::error::Result;
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyEntry {
    pub j: usize,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDumpA {
    pub family: String,
    pub q: usize,
    pub c: Rational,
    #[serde(rename = "N")]
    pub n: usize,
    pub polys: Vec<PolyEntry>,
}

impl FamilyDumpA {
    pub fn build(params: &FamilyParamsA) -> Result<Self> {
        let polys = a_poly_recurrence(params, params.j_max())?
            .into_iter()
            .enumerate()
            .map(|(j, p)| PolyEntry { j, coeffs: p.into_coeffs() })
            .collect();
        Ok(FamilyDumpA { family: "A".into(), q: params.q, c: params.c.clone(), n: params.n, polys })
    }

    /// Rows `(j, power, coeff)` for the CSV form.
    pub fn csv_rows(&self) -> Vec<(usize, usize, String)> {
        self.polys
            .iter()
            .flat_map(|p| p.coeffs.iter().enumerate().map(move |(e, c)| (p.j, e, c.to_string())))
            .collect()
    }
}
