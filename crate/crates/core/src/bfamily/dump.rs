//! JSON and CSV dumps of the B family.

use serde::{Deserialize, Serialize};

use super::{b_poly_recurrence, FamilyParamsB};
use crate::error::Result;
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyEntryB {
    pub n: usize,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDumpB {
    pub family: String,
    #[serde(rename = "M")]
    pub m: usize,
    pub f: Rational,
    #[serde(rename = "N")]
    pub n: usize,
    pub polys: Vec<PolyEntryB>,
}

impl FamilyDumpB {
    pub fn build(params: &FamilyParamsB) -> Result<Self> {
        let polys = b_poly_recurrence(params, params.n)?
            .into_iter()
            .enumerate()
            .map(|(n, p)| PolyEntryB { n, coeffs: p.into_coeffs() })
            .collect();
        Ok(FamilyDumpB { family: "B".into(), m: params.m, f: params.f.clone(), n: params.n, polys })
    }

    /// Rows `(n, power, coeff)`.
    pub fn csv_rows(&self) -> Vec<(usize, usize, String)> {
        self.polys
            .iter()
            .flat_map(|p| p.coeffs.iter().enumerate().map(move |(e, c)| (p.n, e, c.to_string())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn roundtrip() {
        let d = FamilyDumpB::build(&FamilyParamsB::new(2, rat(1, 3), 4).unwrap()).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.starts_with(r#"{"family":"B","M":2,"f":"1/3","N":4,"polys":[{"n":0,"coeffs":["1"]}"#));
        assert_eq!(serde_json::from_str::<FamilyDumpB>(&s).unwrap(), d);
        assert_eq!(d.csv_rows().len(), 15);
    }
}
