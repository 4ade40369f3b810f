use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deviations of a finite-`N` object from its limit along an `N` list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub target: String,
    #[serde(rename = "N")]
    pub n: Vec<usize>,
    /// `None` where the candidate is singular or the value is not finite.
    pub dev_candidate1: Vec<Option<f64>>,
    pub dev_candidate2: Option<Vec<Option<f64>>>,
    /// Fitted order of the converging candidate (or of candidate 1).
    pub order: Option<f64>,
    pub winner: Option<String>,
}

impl ContractionReport {
    /// `dev(N_i) / dev(N_{i+1})` for consecutive entries of candidate 1.
    pub fn ratios(&self) -> Vec<Option<f64>> {
        ratios(&self.dev_candidate1)
    }
}

pub(crate) fn ratios(devs: &[Option<f64>]) -> Vec<Option<f64>> {
    devs.windows(2)
        .map(|w| match (w[0], w[1]) {
            (Some(a), Some(b)) if b > 0.0 => Some(a / b),
            _ => None,
        })
        .collect()
}

/// Mean of `log2(dev_i/dev_{i+1}) / log2(N_{i+1}/N_i)`.
pub fn fitted_order(ns: &[usize], devs: &[Option<f64>]) -> Option<f64> {
    let mut acc = 0.0;
    for (w, d) in ns.windows(2).zip(devs.windows(2)) {
        let (a, b) = (d[0]?, d[1]?);
        if a <= 0.0 || b <= 0.0 {
            return None;
        }
        acc += (a / b).log2() / (w[1] as f64 / w[0] as f64).log2();
    }
    (ns.len() >= 2).then(|| acc / (ns.len() - 1) as f64)
}

pub(crate) fn check_n_list(ns: &[usize], min: usize) -> Result<()> {
    if ns.is_empty() {
        return Err(Error::InvalidParams("empty N list".into()));
    }
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParams("N list must be strictly increasing".into()));
    }
    if ns[0] < min {
        return Err(Error::InvalidParams(format!("N list entries must be at least {min}")));
    }
    Ok(())
}

pub(crate) fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn converges(devs: &[Option<f64>]) -> bool {
    let vals: Option<Vec<f64>> = devs.iter().copied().collect();
    match vals {
        Some(v) if v.len() >= 2 => {
            let (first, last) = (v[0], v[v.len() - 1]);
            first > 0.0 && last < 0.75 * first
        }
        _ => false,
    }
}

/// The candidate whose deviation decays, with its fitted order. When both
/// decay no winner is declared and the order of candidate 1 is reported.
pub(crate) fn pick_winner<'a>(
    ns: &[usize],
    d1: &[Option<f64>],
    d2: &[Option<f64>],
    names: [&'a str; 2],
) -> (Option<&'a str>, Option<f64>) {
    match (converges(d1), converges(d2)) {
        (true, false) => (Some(names[0]), fitted_order(ns, d1)),
        (false, true) => (Some(names[1]), fitted_order(ns, d2)),
        (true, true) => (None, fitted_order(ns, d1)),
        (false, false) => (None, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_inverse_n() {
        let ns = [16, 32, 64];
        let devs: Vec<Option<f64>> = ns.iter().map(|&n| Some(3.0 / n as f64)).collect();
        assert!((fitted_order(&ns, &devs).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(fitted_order(&ns, &[Some(1.0), None, Some(0.5)]), None);
        assert!(check_n_list(&[4, 4], 0).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let r = ContractionReport {
            target: "meixner".into(),
            n: vec![32, 64],
            dev_candidate1: vec![Some(0.1), Some(0.05)],
            dev_candidate2: Some(vec![None, Some(1.7)]),
            order: Some(1.0),
            winner: Some("4c/(4c-1)".into()),
        };
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"target":"meixner","N":[32,64]"#));
        assert_eq!(serde_json::from_str::<ContractionReport>(&s).unwrap(), r);
    }
}
