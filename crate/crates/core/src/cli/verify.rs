//! The `verify` suite: every exact invariant over a parameter grid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{c64, VerifyArgs};
use crate::afamily::{
    a_difference_apply, a_forward_shift, a_generating_function_check, a_poly_from_matrix, a_poly_hypergeometric,
    a_poly_recurrence, biortho_poly_check_a, chi_recurrence_failures, functionals_a, inverse_elements_a_with,
    proposition1, FamilyParamsA, Sigma1,
};
use crate::bfamily::{
    b_difference_check, b_generating_function_check, b_poly_from_matrix, b_poly_hypergeometric, b_poly_recurrence,
    biortho_poly_check_b, functionals_b, inverse_elements_b_with, krawtchouk_relation_holds, proposition2,
    FamilyParamsB,
};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};
use crate::limits::krawtchouk_orthogonality;
use crate::su2rep::{matrix_q, matrix_s, verify_conjugation_identities};

/// Relative tolerance of the floating-point generating-function cases.
pub const GF_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Largest index in the decomposition checks.
    pub index_max: usize,
    pub seed: u64,
}

impl VerifyOptions {
    pub fn from_args(args: &VerifyArgs, seed: u64) -> Self {
        let (default_n, index_max) = if args.quick { (6, 5) } else { (12, 9) };
        VerifyOptions { n_max: args.n_max.unwrap_or(default_n), index_max, seed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub key: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<String> {
        self.cases.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.key, c.detail))
    }
}

#[derive(Debug, Clone)]
enum Case {
    ATriangle { q: usize, c: Rational, n: usize },
    BTriangle { m: usize, f: Rational, n: usize },
    AInverse { q: usize, n: usize },
    BInverse { m: usize, n: usize },
    ABiortho { q: usize, c: Rational, n: usize },
    BBiortho { m: usize, f: Rational, n: usize },
    ADifference { q: usize, c: Rational, n: usize },
    BDifference { f: Rational, n: usize },
    AFunctionals { q: usize, c: Rational, n: usize },
    BFunctionals { f: Rational, n: usize },
    Prop1 { q: usize, j: usize },
    Prop2 { n: usize },
    Conjugation { m: usize, n: usize },
    ChiRecurrence { n: usize },
    Krawtchouk { n: usize },
    Gf { n: usize, seed: u64 },
}

const A_GRID: [(i64, i64); 4] = [(1, 1), (1, 2), (-3, 7), (5, 1)];
const B_GRID: [(i64, i64); 3] = [(1, 1), (1, 3), (-2, 5)];

fn cases(opts: &VerifyOptions) -> Vec<Case> {
    let mut out = Vec::new();
    let a_grid: Vec<Rational> = A_GRID.iter().map(|&(p, q)| rat(p, q)).collect();
    let b_grid: Vec<Rational> = B_GRID.iter().map(|&(p, q)| rat(p, q)).collect();
    for n in 0..=opts.n_max {
        for q in 0..=1usize.min(n) {
            out.push(Case::AInverse { q, n });
            for c in &a_grid {
                out.push(Case::ATriangle { q, c: c.clone(), n });
                out.push(Case::ADifference { q, c: c.clone(), n });
                if n % 2 == 1 || n >= 2 * q {
                    out.push(Case::ABiortho { q, c: c.clone(), n });
                }
                if n >= 4 + q {
                    out.push(Case::AFunctionals { q, c: c.clone(), n });
                }
            }
        }
        for m in 1..=3 {
            out.push(Case::BInverse { m, n });
            out.push(Case::Conjugation { m, n });
            for f in &b_grid {
                out.push(Case::BTriangle { m, f: f.clone(), n });
                out.push(Case::BBiortho { m, f: f.clone(), n });
            }
        }
        for f in &b_grid {
            out.push(Case::BDifference { f: f.clone(), n });
            if n >= 2 {
                out.push(Case::BFunctionals { f: f.clone(), n });
            }
        }
        out.push(Case::ChiRecurrence { n });
        out.push(Case::Krawtchouk { n });
        if (1..=10).contains(&n) {
            out.push(Case::Gf { n, seed: opts.seed });
        }
    }
    for j in 0..=opts.index_max {
        for q in 0..2 {
            out.push(Case::Prop1 { q, j });
        }
        out.push(Case::Prop2 { n: j });
    }
    out
}

fn key(case: &Case) -> String {
    match case {
        Case::ATriangle { q, c, n } => format!("a.triangle/N={n:02}/q={q}/c={c}"),
        Case::BTriangle { m, f, n } => format!("b.triangle/N={n:02}/M={m}/f={f}"),
        Case::AInverse { q, n } => format!("a.inverse/N={n:02}/q={q}"),
        Case::BInverse { m, n } => format!("b.inverse/N={n:02}/M={m}"),
        Case::ABiortho { q, c, n } => format!("a.biortho/N={n:02}/q={q}/c={c}"),
        Case::BBiortho { m, f, n } => format!("b.biortho/N={n:02}/M={m}/f={f}"),
        Case::ADifference { q, c, n } => format!("a.difference/N={n:02}/q={q}/c={c}"),
        Case::BDifference { f, n } => format!("b.difference/N={n:02}/f={f}"),
        Case::AFunctionals { q, c, n } => format!("a.functionals/N={n:02}/q={q}/c={c}"),
        Case::BFunctionals { f, n } => format!("b.functionals/N={n:02}/f={f}"),
        Case::Prop1 { q, j } => format!("a.decomposition/j={j}/q={q}"),
        Case::Prop2 { n } => format!("b.decomposition/n={n}"),
        Case::Conjugation { m, n } => format!("su2.conjugation/N={n:02}/M={m}"),
        Case::ChiRecurrence { n } => format!("a.inverse-recurrence/N={n:02}"),
        Case::Krawtchouk { n } => format!("b.krawtchouk/N={n:02}"),
        Case::Gf { n, .. } => format!("gf.random/N={n:02}"),
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::IdentityFailure { name: what(), residual: String::new() })
    }
}

fn run_case(case: &Case) -> Result<String> {
    match case {
        Case::ATriangle { q, c, n } => {
            let p = FamilyParamsA::new(*q, c.clone(), *n)?;
            let rec = a_poly_recurrence(&p, p.j_max())?;
            for (j, r) in rec.iter().enumerate() {
                check(r.is_monic(), || format!("A_{j} not monic"))?;
                check(&a_poly_hypergeometric(&p, j)? == r, || format!("hypergeometric A_{j}"))?;
                check(&a_poly_from_matrix(&p, j)? == r, || format!("matrix A_{j}"))?;
            }
            Ok(format!("{} polynomials", rec.len()))
        }
        Case::BTriangle { m, f, n } => {
            let p = FamilyParamsB::new(*m, f.clone(), *n)?;
            let rec = b_poly_recurrence(&p, *n)?;
            for (i, r) in rec.iter().enumerate() {
                check(r.is_monic(), || format!("B_{i} not monic"))?;
                check(&b_poly_hypergeometric(&p, i)? == r, || format!("hypergeometric B_{i}"))?;
                check(&b_poly_from_matrix(&p, i)? == r, || format!("matrix B_{i}"))?;
            }
            Ok(format!("{} polynomials", rec.len()))
        }
        Case::AInverse { q, n } => {
            let (a, b) = (rat(2, 1), rat(-3, 14));
            let p = FamilyParamsA::new(*q, &a * &b, *n)?;
            let chi = inverse_elements_a_with(&p, &a, &b)?;
            check(chi.matmul(&matrix_s(*n, &a, &b)).is_identity(), || "chi S != I".into())?;
            Ok("chi S = I, reflection".into())
        }
        Case::BInverse { m, n } => {
            let (a, b) = (rat(2, 3), rat(-1, 2));
            let inv = inverse_elements_b_with(*n, &a, &b, *m)?;
            check(inv.matmul(&matrix_q(*n, &a, &b, *m)).is_identity(), || "varsigma Q != I".into())?;
            Ok("varsigma Q = I, reflection".into())
        }
        Case::ABiortho { q, c, n } => {
            let r = biortho_poly_check_a(&FamilyParamsA::new(*q, c.clone(), *n)?)?;
            check(r.passed, || format!("weighted sums {:?}", r.table))?;
            Ok(format!("{}x{} delta table", r.table.len(), r.table.len()))
        }
        Case::BBiortho { m, f, n } => {
            let r = biortho_poly_check_b(&FamilyParamsB::new(*m, f.clone(), *n)?)?;
            check(r.passed, || format!("weighted sums {:?}", r.table))?;
            Ok(format!("{}x{} delta table", r.table.len(), r.table.len()))
        }
        Case::ADifference { q, c, n } => {
            let p = FamilyParamsA::new(*q, c.clone(), *n)?;
            for j in 0..=p.j_max() {
                a_difference_apply(&p, j)?;
                if j >= 1 {
                    a_forward_shift(&p, j)?;
                }
            }
            Ok(format!("{} degrees", p.j_max() + 1))
        }
        Case::BDifference { f, n } => {
            let p = FamilyParamsB::new(2, f.clone(), *n)?;
            for i in 0..=*n {
                b_difference_check(&p, i)?;
            }
            Ok(format!("{} degrees", n + 1))
        }
        Case::AFunctionals { q, c, n } => {
            let r = functionals_a(&FamilyParamsA::new(*q, c.clone(), *n)?)?;
            Ok(format!("{} moments", r.moments.len()))
        }
        Case::BFunctionals { f, n } => {
            let r = functionals_b(&FamilyParamsB::new(2, f.clone(), *n)?)?;
            Ok(format!("{} moments", r.moments.len()))
        }
        Case::Prop1 { q, j } => {
            let d = proposition1(*q, &rat(1, 2), *j)?;
            check(d.matches_rule(), || format!("degrees {:?} vs rule {:?}", d.solved_degrees(), d.rule))?;
            Ok(format!("degrees {:?}", d.rule))
        }
        Case::Prop2 { n } => {
            let d = proposition2(&rat(1, 2), *n)?;
            check(d.matches_rule(), || format!("degrees {:?} vs rule {:?}", d.solved_degrees(), d.rule))?;
            Ok(format!("degrees {:?}", d.rule))
        }
        Case::Conjugation { m, n } => {
            let r = verify_conjugation_identities(*n, &rat(2, 3), &rat(-1, 2), *m);
            if let Some(f) = r.failures().next() {
                return Err(Error::IdentityFailure { name: f.name.clone(), residual: String::new() });
            }
            Ok(format!("{} identities", r.checks.len()))
        }
        Case::ChiRecurrence { n } => {
            let bad = chi_recurrence_failures(*n, &rat(2, 3), &rat(-5, 2), Sigma1::Corrected);
            check(bad == 0, || format!("{bad} entries violate the inverse-element recurrence"))?;
            Ok("all entries".into())
        }
        Case::Krawtchouk { n } => {
            let (a, b) = (rat(2, 1), rat(-1, 5));
            check(krawtchouk_relation_holds(*n, &a, &b)?, || "B_n vs Krawtchouk".into())?;
            let p = -(&a * &b);
            if let Some((i, j)) = krawtchouk_orthogonality(*n, &p)? {
                return Err(Error::IdentityFailure { name: format!("Krawtchouk orthogonality ({i},{j})"), residual: String::new() });
            }
            Ok("relation and orthogonality".into())
        }
        Case::Gf { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(*n as u64));
            let mut worst = 0.0f64;
            for _ in 0..2 {
                let a = random_rational(&mut rng);
                let b = random_rational(&mut rng);
                let eta = c64(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
                let ra = a_generating_function_check(*n, &a, &b, eta)?;
                let m = rng.gen_range(1..=3);
                let rb = b_generating_function_check(m, *n, &a, &b, eta)?;
                worst = worst.max(ra.max_dev_sum_coherent).max(rb.max_dev_sum_coherent);
            }
            check(worst <= GF_TOLERANCE, || format!("relative deviation {worst:e}"))?;
            Ok(format!("max relative deviation {worst:e}"))
        }
    }
}

/// Nonzero rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 5`.
pub(crate) fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-5..=5);
        if p != 0 {
            return rat(p, rng.gen_range(1..=5));
        }
    }
}

/// Runs every case in parallel; the report is sorted by case key.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let mut results: Vec<VerifyCase> = cases(opts)
        .par_iter()
        .map(|c| {
            let (passed, detail) = match run_case(c) {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            VerifyCase { key: key(c), passed, detail }
        })
        .collect();
    results.sort_by(|a, b| a.key.cmp(&b.key));
    let passed = results.iter().filter(|c| c.passed).count();
    VerifyReport {
        n_max: opts.n_max,
        seed: opts.seed,
        total: results.len(),
        passed,
        failed: results.len() - passed,
        cases: results,
    }
}
