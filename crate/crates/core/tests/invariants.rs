//! Structural invariants checked over random parameters.

use proptest::prelude::*;

use urbansg::mmp;
use urbansg::ppp::{self, PppParams};
use urbansg::sim::CoverageEstimate;
use urbansg::specfun::{gamma, hyp2f1_coverage, integrate_pieces, upper_incomplete_gamma, QuadratureSpec};
use urbansg::{ChannelParams, Dimension, RadioParams};

fn dim_strategy() -> impl Strategy<Value = Dimension> {
    prop_oneof![Just(Dimension::Two), Just(Dimension::Three)]
}

fn ch(alpha: f64) -> ChannelParams {
    ChannelParams::new(alpha, 1.0).unwrap()
}

proptest! {
    #[test]
    fn upper_gamma_recurrence(a in 0.05f64..6.0, x in 0.01f64..40.0) {
        let lhs = upper_incomplete_gamma(a + 1.0, x).unwrap();
        let rhs = a * upper_incomplete_gamma(a, x).unwrap() + x.powf(a) * (-x).exp();
        prop_assert!(((lhs - rhs) / lhs).abs() < 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn upper_gamma_at_zero_is_gamma(a in 0.05f64..20.0) {
        prop_assert_eq!(upper_incomplete_gamma(a, 0.0).unwrap(), gamma(a).unwrap());
    }

    #[test]
    fn hyp2f1_decreasing_in_z(b in 0.05f64..2.0, z in 0.0f64..1e4, dz in 1e-3f64..10.0) {
        let lo = hyp2f1_coverage(b, z).unwrap();
        let hi = hyp2f1_coverage(b, z + dz).unwrap();
        prop_assert!(hi <= lo + 1e-15);
        prop_assert!(hi > 0.0 && lo <= 1.0);
    }

    #[test]
    fn ppp_monotone(dim in dim_strategy(), rho in 1e-6f64..1e-1, beta in 0.1f64..100.0,
                    d in 0.0f64..20.0, alpha in 3.2f64..6.0) {
        let c = |rho: f64, beta: f64, d: f64| {
            ppp::coverage_ppp(&PppParams::new(dim, rho).unwrap(), &ch(alpha), beta, d).unwrap()
        };
        let base = c(rho, beta, d);
        prop_assert!((0.0..=1.0).contains(&base));
        prop_assert!(c(rho, beta, d * 1.1 + 0.01) <= base);
        prop_assert!(c(rho, beta * 1.1, d) <= base);
        prop_assert!(c(rho * 1.1, beta, d) <= base);
    }

    #[test]
    fn ppp_closed_form_matches_general(dim in dim_strategy(), rho in 1e-6f64..1e-1,
                                       beta in 0.1f64..100.0, d in 0.01f64..10.0) {
        let p = PppParams::new(dim, rho).unwrap();
        let e = ppp::outage_exponent(&p, &ch(4.0), beta, d).unwrap();
        let closed = -ppp::coverage_ppp_closed_form_a4(&p, d, beta).unwrap().ln();
        prop_assume!(e < 700.0);
        prop_assert!(((e - closed) / e).abs() < 1e-12);
    }

    #[test]
    fn ppp_exponent_power_law(dim in dim_strategy(), d1 in 0.1f64..5.0, ratio in 1.5f64..10.0) {
        let p = PppParams::new(dim, 1e-3).unwrap();
        let e = |d: f64| ppp::outage_exponent(&p, &ch(4.0), 10.0, d).unwrap();
        let slope = (e(d1 * ratio) / e(d1)).ln() / ratio.ln();
        prop_assert!((slope - dim.as_f64()).abs() < 1e-9);
    }

    #[test]
    fn rho_csma_increasing_concave_bounded(dim in dim_strategy(), rho in 1e-9f64..1e-7) {
        let r = RadioParams::wifi();
        let rd = mmp::detection_radius(&r, &ch(4.0));
        let pd = mmp::prob_detect(&r, &ch(4.0), rd, dim).unwrap();
        let f = |x: f64| mmp::mmp_intensity(x, rd, pd, dim).unwrap().1;
        let sat = mmp::saturation_intensity(rd, pd, dim);
        let (a, b, c) = (f(rho), f(1.5 * rho), f(2.0 * rho));
        prop_assert!(a < b && b < c);
        prop_assert!(b - a >= c - b);
        prop_assert!(c <= sat);
    }

    #[test]
    fn detection_probability_is_parameter_free(p_t in 1e-2f64..1e3, td_dbm in -100.0f64..-40.0,
                                               mu in 0.1f64..10.0, dim in dim_strategy()) {
        let reference = {
            let r = RadioParams::wifi();
            mmp::prob_detect(&r, &ch(4.0), mmp::detection_radius(&r, &ch(4.0)), dim).unwrap()
        };
        let r = RadioParams { p_t, t_d: urbansg::dbm_to_mw(td_dbm), ..RadioParams::wifi() };
        let c = ChannelParams::new(4.0, mu).unwrap();
        let v = mmp::prob_detect(&r, &c, mmp::detection_radius(&r, &c), dim).unwrap();
        prop_assert!(((v - reference) / reference).abs() < 1e-12);
    }

    #[test]
    fn ci_brackets_estimate(trials in 1u64..100_000, frac in 0.0f64..=1.0) {
        let s = ((trials as f64) * frac).floor() as u64;
        let e = CoverageEstimate::from_counts(s, trials, 0).unwrap();
        prop_assert!(e.ci_low <= e.p_hat && e.p_hat <= e.ci_high);
        prop_assert!(e.ci_low >= 0.0 && e.ci_high <= 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rho_csma_saturates(dim in dim_strategy(), x in 20.0f64..200.0) {
        let r = RadioParams::wifi();
        let rd = mmp::detection_radius(&r, &ch(4.0));
        let pd = mmp::prob_detect(&r, &ch(4.0), rd, dim).unwrap();
        let rho = x / (dim.ball_volume(rd) * pd);
        let sat = mmp::saturation_intensity(rd, pd, dim);
        let (_, rc) = mmp::mmp_intensity(rho, rd, pd, dim).unwrap();
        prop_assert!((sat - rc) / sat < 1e-6);
    }

    #[test]
    fn lens_density_has_unit_mass(dim in dim_strategy(), r_io in 1.0f64..200.0, ratio in 1.05f64..20.0) {
        let r_v = r_io * ratio;
        let spec = QuadratureSpec::new(1e-14, 1e-12, 4000).unwrap();
        let mass = integrate_pieces(|x| mmp::dist_density_lens(x, r_io, r_v, dim),
                                    &[0.0, r_v - r_io, r_v + r_io], &spec).unwrap();
        prop_assert!((mass - 1.0).abs() < 1e-8, "{mass}");
        for i in 0..=50 {
            let x = (r_v + r_io) * i as f64 / 50.0;
            prop_assert!(mmp::dist_density_lens(x, r_io, r_v, dim) >= 0.0);
        }
    }

    #[test]
    fn pd_prime_closed_form_matches_quadrature(alpha in prop_oneof![Just(3.5), Just(4.0), Just(4.5)],
                                               r_io in 5.0f64..200.0) {
        let r = RadioParams::wifi();
        let c = ch(alpha);
        let r_v = mmp::vulnerability_radius(r_io, r.beta, r.eps_v, alpha).unwrap();
        let spec = QuadratureSpec::new(1e-15, 1e-12, 4000).unwrap();
        let closed = mmp::prob_detect_prime(&r, &c, r_io, r_v, Dimension::Three).unwrap();
        let q = mmp::prob_detect_prime_quadrature(&r, &c, r_io, r_v, Dimension::Three, &spec).unwrap();
        prop_assert!(((closed - q) / q).abs() < 1e-6, "{closed} vs {q}");
    }

    #[test]
    fn csma_coverage_monotone(dim in dim_strategy(), r_io in 5.0f64..200.0, beta in 1.0f64..50.0) {
        let rho = if dim == Dimension::Two { 1.51e-2 } else { 7.56e-4 };
        let r = RadioParams { beta, ..RadioParams::wifi() };
        let r2 = RadioParams { beta: beta * 1.2, ..r };
        let base = mmp::coverage_csma(rho, &r, &ch(4.0), r_io, dim).unwrap();
        prop_assert!((0.0..=1.0).contains(&base));
        prop_assert!(mmp::coverage_csma(rho, &r, &ch(4.0), r_io * 1.1, dim).unwrap() <= base + 1e-12);
        prop_assert!(mmp::coverage_csma(rho, &r2, &ch(4.0), r_io, dim).unwrap() <= base + 1e-12);
    }
}
