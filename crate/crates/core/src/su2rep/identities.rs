//! Conjugation identities for polynomials in the ladder operators, checked as
//! exact matrix equalities.

use serde::{Deserialize, Serialize};

use super::{build_rep, exp_nilpotent, matrix_q, matrix_q_inverse, matrix_s, matrix_s_inverse, RationalMatrix};
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub a: Rational,
    pub b: Rational,
    #[serde(rename = "M")]
    pub m: usize,
    pub checks: Vec<IdentityCheck>,
}

impl ConjugationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn derivative(coeffs: &[Rational]) -> Vec<Rational> {
    coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from(i)).collect()
}

fn exp_of(x: &RationalMatrix) -> RationalMatrix {
    exp_nilpotent(x).expect("ladder polynomials are nilpotent")
}

/// Checks, for `Q(x)` in `{a x, a x^2, b x^M}`:
///
/// * `J0 J±^n = J±^n (J0 ± n)` for `n ≤ N+1`
/// * `[J+, J-^n]` and `[J-, J+^n]` for `1 ≤ n ≤ N+1`
/// * `[Q(J±), J0] = ∓ J± Q'(J±)` and `e^{Q(J±)} J0 e^{-Q(J±)} = J0 ∓ J± Q'(J±)`
/// * `[J+, Q(J-)] = 2 J0 Q'(J-) + J- Q''(J-)`, `[J-, Q(J+)] = -2 Q'(J+) J0 - J+ Q''(J+)`
/// * `e^{Q(J-)} J+ e^{-Q(J-)} = J+ - 2 J0 Q'(J-) - J- [Q''(J-) + Q'(J-)^2]`
/// * `e^{Q(J+)} J- e^{-Q(J+)} = J- + 2 Q'(J+) J0 + J+ [Q''(J+) - Q'(J+)^2]`
///
/// and the composites `S^-1 J0 S`, `S J0 S^-1`, `S J-^2 S^-1` (plus the bracket
/// `S J- S^-1` at power one), `Q^-1 J0 Q` and `Q J0 Q^-1`.
pub fn verify_conjugation_identities(n: usize, a: &Rational, b: &Rational, m: usize) -> ConjugationReport {
    assert!(m >= 1, "M must be positive");
    let rep = build_rep(n);
    let (jp, jm, j0) = (&rep.jp, &rep.jm, &rep.j0);
    let id = rep.identity();
    let mut checks = Vec::new();
    let mut push = |name: String, passed: bool| checks.push(IdentityCheck { name, passed });

    for k in 0..=n + 1 {
        let kr = Rational::from(k);
        let jpk = jp.pow(k);
        let jmk = jm.pow(k);
        push(format!("J0 J+^{k} = J+^{k} (J0 + {k})"), j0 * &jpk == &jpk * &(j0 + &id.scale(&kr)));
        push(format!("J0 J-^{k} = J-^{k} (J0 - {k})"), j0 * &jmk == &jmk * &(j0 - &id.scale(&kr)));
        if k >= 1 {
            let two_k = Rational::from(2 * k);
            let kk1 = Rational::from(k * (k - 1));
            let jm_prev = jm.pow(k - 1);
            let jp_prev = jp.pow(k - 1);
            let rhs = &(j0 * &jm_prev).scale(&two_k) + &jm_prev.scale(&kk1);
            push(format!("[J+, J-^{k}]"), jp.commutator(&jmk) == rhs);
            let rhs = &(-&(&jp_prev * j0).scale(&two_k)) - &jp_prev.scale(&kk1);
            push(format!("[J-, J+^{k}]"), jm.commutator(&jpk) == rhs);
        }
    }

    let mut bxm = vec![Rational::zero(); m + 1];
    bxm[m] = b.clone();
    let polys: [(String, Vec<Rational>); 3] = [
        ("a x".into(), vec![Rational::zero(), a.clone()]),
        ("a x^2".into(), vec![Rational::zero(), Rational::zero(), a.clone()]),
        (format!("b x^{m}"), bxm),
    ];
    for (label, q) in &polys {
        let q1 = derivative(q);
        let q2 = derivative(&q1);
        for (j, sign, tag) in [(jp, Rational::one(), "J+"), (jm, Rational::integer(-1), "J-")] {
            let qx = j.poly_eval(q);
            let qpx = j.poly_eval(&q1);
            let j_qp = j * &qpx;
            push(
                format!("[Q(J{}), J0] = {}J Q'(J), Q = {label}", &tag[1..], if tag == "J+" { "-" } else { "+" }),
                qx.commutator(j0) == (-&j_qp).scale(&sign),
            );
            push(
                format!("e^Q(J{}) J0 e^-Q(J{}), Q = {label}", &tag[1..], &tag[1..]),
                &(&exp_of(&qx) * j0) * &exp_of(&-&qx) == j0 - &j_qp.scale(&sign),
            );
        }
        let qm = jm.poly_eval(q);
        let qm1 = jm.poly_eval(&q1);
        let qm2 = jm.poly_eval(&q2);
        push(
            format!("[J+, Q(J-)], Q = {label}"),
            jp.commutator(&qm) == &(j0 * &qm1).scale(&Rational::integer(2)) + &(jm * &qm2),
        );
        let lhs = &(&exp_of(&qm) * jp) * &exp_of(&-&qm);
        let rhs = &(jp - &(j0 * &qm1).scale(&Rational::integer(2))) - &(jm * &(&qm2 + &(&qm1 * &qm1)));
        push(format!("e^Q(J-) J+ e^-Q(J-), Q = {label}"), lhs == rhs);

        let qp = jp.poly_eval(q);
        let qp1 = jp.poly_eval(&q1);
        let qp2 = jp.poly_eval(&q2);
        push(
            format!("[J-, Q(J+)], Q = {label}"),
            jm.commutator(&qp) == &(-&(&qp1 * j0).scale(&Rational::integer(2))) - &(jp * &qp2),
        );
        let lhs = &(&exp_of(&qp) * jm) * &exp_of(&-&qp);
        let rhs = &(jm + &(&qp1 * j0).scale(&Rational::integer(2))) + &(jp * &(&qp2 - &(&qp1 * &qp1)));
        push(format!("e^Q(J+) J- e^-Q(J+), Q = {label}"), lhs == rhs);
    }

    let two = Rational::integer(2);
    let four = Rational::integer(4);
    let s = matrix_s(n, a, b);
    let si = matrix_s_inverse(n, a, b);
    let one_plus_2j0 = &id + &j0.scale(&two);

    // W = J+ + 2b(1+2J0)J- - 4b^2 J-^3
    let w = &(jp + &(&one_plus_2j0 * jm).scale(&(&two * b))) - &jm.pow(3).scale(&(&four * b * b));
    let rhs = &(j0 - &jm.pow(2).scale(&(&two * b))) + &(&w * &w).scale(&(&two * a));
    push("S^-1 J0 S".into(), &(&si * j0) * &s == rhs);

    // V = J- + 2a J+(1+2J0) - 4a^2 J+^3
    let v = &(jm + &(jp * &one_plus_2j0).scale(&(&two * a))) - &jp.pow(3).scale(&(&four * a * a));
    let rhs = &(j0 - &jp.pow(2).scale(&(&two * a))) + &(&v * &v).scale(&(&two * b));
    push("S J0 S^-1".into(), &(&s * j0) * &si == rhs);
    push("S J- S^-1".into(), &(&s * jm) * &si == v);
    push("S J-^2 S^-1".into(), &(&s * &jm.pow(2)) * &si == &v * &v);

    let q = matrix_q(n, a, b, m);
    let qi = matrix_q_inverse(n, a, b, m);
    let mr = Rational::from(m);
    // J0 + aJ+ - MbJ-^M + abM(M-1+2J0)J-^{M-1} - ab^2M^2 J-^{2M-1}
    let inner = &id.scale(&Rational::from(m - 1)) + &j0.scale(&two);
    let rhs = &(&(&(j0 + &jp.scale(a)) - &jm.pow(m).scale(&(&mr * b)))
        + &(&inner * &jm.pow(m - 1)).scale(&(a * b * &mr)))
        - &jm.pow(2 * m - 1).scale(&(a * b * b * &mr * &mr));
    push("Q^-1 J0 Q".into(), &(&qi * j0) * &q == rhs);
    // J0 - aJ+ + Mb[J- + 2aJ0 - a^2 J+]^M
    let y = &(jm + &j0.scale(&(&two * a))) - &jp.scale(&(a * a));
    let rhs = &(j0 - &jp.scale(a)) + &y.pow(m).scale(&(&mr * b));
    push("Q J0 Q^-1".into(), &(&q * j0) * &qi == rhs);

    ConjugationReport { n, a: a.clone(), b: b.clone(), m, checks }
}
