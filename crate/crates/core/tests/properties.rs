use proptest::prelude::*;

use su2_dortho::afamily::{a_poly_from_matrix, a_poly_from_matrix_with, a_poly_recurrence, FamilyDumpA, FamilyParamsA};
use su2_dortho::bfamily::{b_poly_hypergeometric, b_poly_recurrence, biortho_poly_check_b, FamilyParamsB};
use su2_dortho::exactnum::{hyp_terminating, hyp_terminating_naive, rat, Rational, UPoly};
use su2_dortho::limits::{contract_a, fitted_order, krawtchouk_orthogonality, ContractionReport};
use su2_dortho::su2rep::{build_rep, exp_nilpotent, ladder_power_law_holds, matrix_s, matrix_s_inverse};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rational_text_roundtrip(x in rational(), y in nonzero_rational()) {
        let z = &x / &y;
        prop_assert_eq!(z.to_string().parse::<Rational>().unwrap(), z.clone());
        prop_assert_eq!(&(&z * &y) , &x);
    }

    #[test]
    fn interpolation_recovers_polynomial(coeffs in prop::collection::vec(rational(), 1..7)) {
        let p = UPoly::new(coeffs);
        let m = p.degree().unwrap_or(0);
        let vals: Vec<Rational> = (0..=m as i64 + 2).map(|x| p.eval_i64(x)).collect();
        prop_assert_eq!(UPoly::interpolate(&vals), p);
    }

    #[test]
    fn hypergeometric_matches_naive(n in 0i64..6, a in rational(), b in rational(), z in rational()) {
        let den = &b + Rational::integer(7) ;
        prop_assume!(!den.is_nonpositive_integer());
        let num = [Rational::integer(-n), a];
        prop_assert_eq!(
            hyp_terminating(&num, std::slice::from_ref(&den), &z).unwrap(),
            hyp_terminating_naive(&num, &[den], &z).unwrap()
        );
    }

    #[test]
    fn s_times_inverse_is_identity(n in 0usize..8, a in rational(), b in rational()) {
        prop_assert!(matrix_s_inverse(n, &a, &b).matmul(&matrix_s(n, &a, &b)).is_identity());
    }

    #[test]
    fn parity_vanishing(n in 0usize..9, a in rational(), b in rational()) {
        let s = matrix_s(n, &a, &b);
        for k in 0..=n {
            for m in 0..=n {
                if (k + m) % 2 == 1 {
                    prop_assert!(s.get(k, m).is_zero());
                }
            }
        }
    }

    #[test]
    fn ladder_power_law(n in 0usize..9, k in 0usize..5) {
        let rep = build_rep(n);
        prop_assert!(ladder_power_law_holds(&rep, k));
        prop_assert!(rep.commutation_holds());
        prop_assert!(exp_nilpotent(&rep.jp).is_ok());
    }

    #[test]
    fn a_family_monic_and_product_only(q in 0usize..2, n in 1usize..9, c in nonzero_rational(), a in nonzero_rational()) {
        prop_assume!(n >= q);
        let p = FamilyParamsA::new(q, c.clone(), n).unwrap();
        let rec = a_poly_recurrence(&p, p.j_max()).unwrap();
        let b = &c / &a;
        for (j, r) in rec.iter().enumerate() {
            prop_assert!(r.is_monic());
            prop_assert_eq!(r.degree(), Some(j));
            prop_assert_eq!(&a_poly_from_matrix_with(&p, &a, &b, j).unwrap(), r);
        }
        prop_assert_eq!(a_poly_from_matrix(&p, p.j_max()).unwrap(), rec[p.j_max()].clone());
    }

    #[test]
    fn b_family_hypergeometric_and_biortho(m in 1usize..4, n in 0usize..7, f in nonzero_rational()) {
        let p = FamilyParamsB::new(m, f, n).unwrap();
        let rec = b_poly_recurrence(&p, n).unwrap();
        for (i, r) in rec.iter().enumerate() {
            prop_assert!(r.is_monic());
            prop_assert_eq!(&b_poly_hypergeometric(&p, i).unwrap(), r);
        }
        prop_assert!(biortho_poly_check_b(&p).unwrap().passed);
    }

    #[test]
    fn krawtchouk_orthogonality_rational_p(n in 0usize..7, p in nonzero_rational()) {
        prop_assume!(!p.is_one());
        prop_assert_eq!(krawtchouk_orthogonality(n, &p).unwrap(), None);
    }

    #[test]
    fn dump_json_roundtrip(q in 0usize..2, n in 1usize..8, c in nonzero_rational()) {
        let d = FamilyDumpA::build(&FamilyParamsA::new(q, c, n).unwrap()).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<FamilyDumpA>(&s).unwrap(), d);
    }

    #[test]
    fn contraction_report_roundtrip(q in 0usize..2, c in nonzero_rational(), j in 0usize..3) {
        let r = contract_a(q, &c, j, &[8, 16, 32]).unwrap();
        prop_assert!(r.dev_candidate1.iter().flatten().all(|d| *d >= 0.0));
        let s = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<ContractionReport>(&s).unwrap(), r);
    }

    #[test]
    fn fitted_order_of_power_law(p in 0.25f64..3.0, scale in 0.01f64..10.0) {
        let ns = [8usize, 16, 32, 64];
        let devs: Vec<Option<f64>> = ns.iter().map(|&n| Some(scale / (n as f64).powf(p))).collect();
        prop_assert!((fitted_order(&ns, &devs).unwrap() - p).abs() < 1e-9);
    }
}
