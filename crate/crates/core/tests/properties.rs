use num_complex::Complex64;
use proptest::prelude::*;
use specladder_core::ladder::{
    build_ladder_matrices, coeffs_from_spectrum, iterate_consistency, recurrence_closed_sum,
    spectrum_from_coeffs, spectrum_from_squared_moduli, t_step_from_squared_moduli, LadderSpec,
};
use specladder_core::{ratio, Rational, Tolerance};

fn coeffs() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), 1..40)
        .prop_map(|v| v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

fn rationals() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-50i128..50, 1i128..12), 1..30)
        .prop_map(|v| v.into_iter().map(|(n, d)| ratio(n, d)).collect())
}

proptest! {
    #[test]
    fn spectra_from_coefficients_are_consistent(c in coeffs()) {
        let pair = spectrum_from_coeffs(&LadderSpec::unbounded(c.clone()).unwrap());
        let scale = c.iter().map(|z| z.norm_sqr()).fold(1.0, f64::max);
        let tol = Tolerance::new(1e-12 * scale, 1e-12);
        prop_assert!(pair.check(&tol).is_ok());
        let back = coeffs_from_spectrum(&pair, &tol).unwrap();
        for (x, z) in back.iter().zip(&c) {
            prop_assert!((x - z.norm_sqr()).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn finite_ladders_close_at_the_top(c in coeffs()) {
        let mut c = c;
        *c.last_mut().unwrap() = Complex64::new(0.0, 0.0);
        let pair = spectrum_from_coeffs(&LadderSpec::finite(c).unwrap());
        let n = pair.len();
        prop_assert_eq!(pair.s[n - 1], -pair.a[n - 1]);
    }

    #[test]
    fn recurrence_matches_iteration(a in rationals()) {
        prop_assert_eq!(recurrence_closed_sum(&a), iterate_consistency(&a));
    }

    #[test]
    fn exact_round_trip(c_sq in prop::collection::vec((0i128..100, 1i128..9), 1..30)) {
        let c_sq: Vec<Rational> = c_sq.into_iter().map(|(n, d)| ratio(n, d)).collect();
        let pair = spectrum_from_squared_moduli(&c_sq, false).unwrap();
        prop_assert!(pair.check(&Tolerance::exact()).is_ok());
        prop_assert_eq!(coeffs_from_spectrum(&pair, &Tolerance::exact()).unwrap(), c_sq);
    }

    #[test]
    fn matrices_reproduce_the_pair(c in coeffs(), extra in 0usize..3) {
        let spec = LadderSpec::unbounded(c.clone()).unwrap();
        let dim = (c.len() + 1).saturating_sub(extra).max(1);
        let rep = build_ladder_matrices(&spec, dim).unwrap();
        let pair = spectrum_from_coeffs(&spec);
        let (s, a) = rep.trusted_diagonals();
        let scale = c.iter().map(|z| z.norm_sqr()).fold(1.0, f64::max);
        for k in 0..s.len() {
            prop_assert!((s[k] - pair.s[k]).abs() <= 1e-12 * scale);
            prop_assert!((a[k] - pair.a[k]).abs() <= 1e-12 * scale);
        }
        prop_assert!(rep.s_mat.is_diagonal() && rep.a_mat.is_diagonal());
        prop_assert_eq!(rep.lower.clone(), rep.raise.adjoint());
    }

    #[test]
    fn t_step_relations(c_sq in prop::collection::vec((0i128..60, 1i128..5), 1..25), step in 1usize..5) {
        let c_sq: Vec<Rational> = c_sq.into_iter().map(|(n, d)| ratio(n, d)).collect();
        let t = t_step_from_squared_moduli(step, &c_sq);
        prop_assert!(t.check(&Tolerance::exact()).is_ok());
        for k in 0..c_sq.len() {
            let two_c = c_sq[k] * 2;
            prop_assert_eq!(t.s[k] + t.a[k], two_c);
            if k + step < c_sq.len() {
                prop_assert_eq!(t.s[k + step] - t.a[k + step], two_c);
            }
        }
    }
}
