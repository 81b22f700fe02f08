//! Special-function checks against frozen high-precision reference values and
//! quadrature, shared by the `specfun_oracles` and `acceptance` targets.

#![allow(clippy::excessive_precision, clippy::approx_constant)]

use std::f64::consts::PI;

use urbansg::specfun::{
    gamma, hyp2f1_coverage, integrate, log_gamma, lower_incomplete_gamma, regularized_lower_gamma,
    regularized_upper_gamma, upper_incomplete_gamma, QuadratureSpec,
};
use urbansg::Error;

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

const LOG_GAMMA: [(f64, f64); 18] = [
    (0.001, 6.9071788853838536617),
    (0.01, 4.5994798780420217016),
    (0.1, 2.252712651734205902),
    (0.5, 0.57236494292470008707),
    (0.75, 0.20328095143129537148),
    (0.9, 0.066376239734742954426),
    (0.999, 0.00057803853289138023817),
    (1.0001, -0.000057713342220471268005),
    (1.2, -0.085374090003315836884),
    (1.5, -0.12078223763524522235),
    (1.9, -0.038984275923083361674),
    (2.05, 0.021937091667171754244),
    (2.5, 0.28468287047291915963),
    (3.7, 1.4280723266653881292),
    (7.3, 7.1478925230222486921),
    (13.1, 20.240212723401434681),
    (27.9, 64.226296537041479276),
    (50.0, 144.56574394634488601),
];

pub fn log_gamma_matches_reference() {
    for (a, v) in LOG_GAMMA {
        let got = log_gamma(a).unwrap();
        assert!(rel(got, v) < 1e-13, "lnΓ({a}) = {got}, want {v}");
    }
}

pub fn log_gamma_exact_points() {
    assert_eq!(log_gamma(1.0).unwrap(), 0.0);
    assert!(log_gamma(2.0).unwrap().abs() < 1e-16);
    assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
    assert!((gamma(0.75).unwrap() - 1.2254167024651776451).abs() < 1e-14);
    assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-14);
}

pub fn log_gamma_domain() {
    assert!(matches!(log_gamma(0.0), Err(Error::Domain { .. })));
    assert!(log_gamma(-1.5).is_err());
    assert!(log_gamma(f64::NAN).is_err());
}

const UPPER_GAMMA: [(f64, f64, f64); 14] = [
    (0.1, 0.01, 3.2096552407902131426),
    (0.1, 3.0, 0.014891224816681060707),
    (0.5, 0.5, 0.56241823159440712428),
    (0.75, 13.8155, 5.10046031803118165e-7),
    (0.75, 1.0, 0.31863281356270656707),
    (1.5, 0.2, 0.83326821538151736311),
    (1.5, 2.5, 0.15225125499165762764),
    (2.0, 7.0, 0.007295055724436129664),
    (3.3, 4.3, 0.6631610680716528041),
    (4.9, 1.0, 20.577476746780829599),
    (5.0, 30.0, 8.698322284947571263e-8),
    (0.3, 100.0, 1.4707936461033564114e-45),
    (5.0, 100.0, 3.8734332808745531497e-36),
    (2.5, 60.0, 4.1722408534457128748e-24),
];

pub fn upper_incomplete_gamma_matches_reference() {
    for (a, x, v) in UPPER_GAMMA {
        let got = upper_incomplete_gamma(a, x).unwrap();
        assert!(rel(got, v) < 1e-10, "Γ({a}, {x}) = {got:e}, want {v:e}");
    }
}

pub fn upper_incomplete_gamma_trivial_points() {
    assert!((upper_incomplete_gamma(1.0, 0.0).unwrap() - 1.0).abs() < 1e-15);
    assert!(rel(upper_incomplete_gamma(1.0, 2.0).unwrap(), (-2f64).exp()) < 1e-14);
    assert!((upper_incomplete_gamma(0.75, 13.8155).unwrap() - 5.0e-7).abs() < 2e-8);
}

pub fn lower_plus_upper_is_complete() {
    for &a in &[0.1, 0.5, 0.75, 1.5, 3.3, 5.0] {
        for &x in &[0.0, 0.01, 0.9, a + 1.0, 4.3, 20.0, 100.0] {
            let sum = lower_incomplete_gamma(a, x).unwrap() + upper_incomplete_gamma(a, x).unwrap();
            assert!(rel(sum, gamma(a).unwrap()) < 1e-12, "a={a}, x={x}");
            let p = regularized_lower_gamma(a, x).unwrap();
            let q = regularized_upper_gamma(a, x).unwrap();
            assert!((p + q - 1.0).abs() < 1e-13);
            assert!((0.0..=1.0).contains(&p));
        }
    }
}

pub fn incomplete_gamma_by_quadrature() {
    let spec = QuadratureSpec::new(1e-15, 1e-12, 4000).unwrap();
    for &(a, x) in &[(0.75, 13.8155), (1.5, 2.5), (3.3, 4.3), (0.5, 0.5)] {
        let q = integrate(|t: f64| t.powf(a - 1.0) * (-t).exp(), x, f64::INFINITY, &spec).unwrap();
        assert!(rel(upper_incomplete_gamma(a, x).unwrap(), q) < 1e-9, "a={a}, x={x}");
    }
}

pub fn incomplete_gamma_domain() {
    assert!(upper_incomplete_gamma(0.0, 1.0).is_err());
    assert!(upper_incomplete_gamma(1.0, -1e-9).is_err());
    assert!(lower_incomplete_gamma(-1.0, 1.0).is_err());
}

const HYP_Z: [f64; 11] = [0.1, 0.5, 0.9, 1.0, 3.0, 4.0, 4.5, 10.0, 99.0, 1e4, 1e8];

const HYP_TABLE: [(f64, [f64; 11]); 7] = [
    (
        0.5,
        [
            0.96853408234038924938,
            0.87041975136710319747,
            0.80013025508776881042,
            0.78539816339744830962,
            0.60459978807807261686,
            0.55357435889704525151,
            0.53282177169599150556,
            0.39987600505576613678,
            0.14780376623747748025,
            0.01560796660108231381,
            0.00015706963267952299526,
        ],
    ),
    (
        0.75,
        [
            0.95968471721629181044,
            0.83589986459697425752,
            0.74918936004491903423,
            0.73124324159904157254,
            0.51838776657547197067,
            0.46114686734199470555,
            0.43827817853331008673,
            0.2982396544525343845,
            0.075927338450030283384,
            0.0030321682032854644271,
            3.3021622036787746849e-6,
        ],
    ),
    (
        2.0 / 3.0,
        [
            0.96233138307221911709,
            0.84611568158053723123,
            0.76413535505594110818,
            0.74710145578284836826,
            0.54292200668979259556,
            0.48718429391726296746,
            0.46479277847238327214,
            0.32576116537060394343,
            0.092855487422108967967,
            0.0050102880277996067451,
            1.1205214500641343795e-5,
        ],
    ),
    (
        1.5,
        [
            0.94397752978832251859,
            0.77748149179738081516,
            0.66623248304077063194,
            0.64380550980765507115,
            0.39540021192192738314,
            0.33481923082721606137,
            0.31145215220267232963,
            0.18003719848327015896,
            0.02582412829583401575,
            0.00029531761001967530586,
            2.999528791101961431e-8,
        ],
    ),
    (
        0.3,
        [
            0.97814297020602074382,
            0.90897276737475562395,
            0.85833844207643313069,
            0.84759658256486029203,
            0.71130101128752687321,
            0.67100677387885787792,
            0.65433309095173152825,
            0.5426703694036600075,
            0.28919890225082238097,
            0.07346156932219663953,
            0.004637811375940325601,
        ],
    ),
    (
        1.999,
        [
            0.93797401348424429934,
            0.75631369479047559638,
            0.63744416058692367546,
            0.61375387138297959744,
            0.35865767368685369195,
            0.29887463558607637219,
            0.27612735413675703286,
            0.15208213151319177124,
            0.019270374830600603916,
            0.00019991509972399831944,
            2.0010006293256600026e-8,
        ],
    ),
    (
        0.9999,
        [
            0.95310409321671110681,
            0.8109388065197908498,
            0.71318324196276369789,
            0.69316011333603365832,
            0.46211655777342616657,
            0.40237849214866274984,
            0.37885202977271790482,
            0.23980753282890512939,
            0.046524535622472095326,
            0.00092139263381604486848,
            1.8435978264749710035e-7,
        ],
    ),
];

pub fn hyp2f1_matches_reference_in_every_regime() {
    for (b, row) in HYP_TABLE {
        for (z, v) in HYP_Z.iter().zip(row) {
            let got = hyp2f1_coverage(b, *z).unwrap();
            assert!(rel(got, v) < 1e-12, "b={b}, z={z}: {got:e} vs {v:e}");
        }
    }
}

pub fn hyp2f1_trivial_points() {
    assert_eq!(hyp2f1_coverage(0.75, 0.0).unwrap(), 1.0);
    assert!((hyp2f1_coverage(1.0, 1.0).unwrap() - 2f64.ln()).abs() < 1e-15);
    assert!((hyp2f1_coverage(0.75, 99.0).unwrap() - 0.076).abs() < 1e-3);
}

pub fn hyp2f1_integral_identity() {
    // F(z) z^b = b ∫_0^z t^(b-1) / (1 + t) dt; substitute t = s^(1/b) to remove the endpoint singularity.
    let spec = QuadratureSpec::new(1e-14, 1e-12, 4000).unwrap();
    for &b in &[0.5, 0.75, 2.0 / 3.0, 1.0, 1.5] {
        for &z in &[0.1f64, 1.0, 10.0, 99.0, 1e4] {
            let top = z.powf(b);
            let rhs = integrate(|s: f64| 1.0 / (1.0 + s.powf(1.0 / b)), 0.0, top, &spec).unwrap();
            let lhs = hyp2f1_coverage(b, z).unwrap() * top;
            assert!(rel(lhs, rhs) < 1e-8, "b={b}, z={z}");
        }
    }
}

pub fn hyp2f1_domain() {
    assert!(hyp2f1_coverage(0.0, 1.0).is_err());
    assert!(hyp2f1_coverage(2.01, 1.0).is_err());
    assert!(hyp2f1_coverage(1.0, -0.5).is_err());
    assert!(hyp2f1_coverage(1.0, f64::NAN).is_err());
}

pub fn quadrature_examples() {
    let spec = QuadratureSpec::default();
    let v = integrate(|u: f64| 1.0 / (1.0 + u * u), 0.0, f64::INFINITY, &spec).unwrap();
    assert!(rel(v, PI / 2.0) < 1e-10);
    let p = 4.0 / 3.0;
    let v = integrate(|u: f64| 1.0 / (1.0 + u.powf(p)), 0.0, f64::INFINITY, &spec).unwrap();
    let expect = (PI / p) / (PI / p).sin();
    assert!(rel(v, expect) < 1e-9, "{v} vs {expect}");
    assert!((expect - 3.3321622036187747).abs() < 1e-14);
    assert!((integrate(|u| u, 0.0, 1.0, &spec).unwrap() - 0.5).abs() < 1e-15);
}

pub fn quadrature_reports_best_estimate_on_failure() {
    let spec = QuadratureSpec::new(1e-15, 1e-15, 5).unwrap();
    match integrate(|u: f64| (1.0 / u).sin(), 1e-3, 1.0, &spec) {
        Err(Error::NonConvergence {
            estimate,
            abs_error,
            subdivisions,
        }) => {
            assert!(estimate.is_finite() && abs_error > 0.0);
            assert_eq!(subdivisions, 5);
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

pub fn no_nan_escapes() {
    for &a in &[1e-3, 0.2, 1.0, 7.0, 50.0] {
        for &x in &[0.0, 1e-300, 1e-5, 1.0, 1e3] {
            assert!(upper_incomplete_gamma(a, x).unwrap().is_finite());
            assert!(!regularized_lower_gamma(a, x).unwrap().is_nan());
        }
    }
    for &z in &[1e-300, 1e-10, 0.4999, 0.5001, 3.999, 4.001, 1e300] {
        let v = hyp2f1_coverage(0.75, z).unwrap();
        assert!(v.is_finite() && (0.0..=1.0).contains(&v), "z={z}: {v}");
    }
}

pub fn upper_gamma_recurrence_grid() {
    for i in 0..40 {
        let a = 0.05 + 0.15 * i as f64;
        for j in 0..40 {
            let x = 0.01 * 1.3f64.powi(j);
            let lhs = upper_incomplete_gamma(a + 1.0, x).unwrap();
            let rhs = a * upper_incomplete_gamma(a, x).unwrap() + x.powf(a) * (-x).exp();
            assert!(rel(lhs, rhs) < 1e-10, "a={a}, x={x}");
        }
    }
}

pub fn upper_gamma_at_zero() {
    for i in 1..200 {
        let a = 0.05 * i as f64;
        let g = upper_incomplete_gamma(a, 0.0).unwrap();
        assert!(rel(g, gamma(a).unwrap()) < 1e-12);
        assert!(rel(g, log_gamma(a).unwrap().exp()) < 1e-12, "a={a}");
    }
}

pub fn hyp2f1_strictly_decreasing() {
    for &b in &[0.3, 0.5, 2.0 / 3.0, 0.75, 1.0, 1.5, 2.0] {
        let mut prev = 1.0;
        for k in 1..=160 {
            let z = 10f64.powf(-4.0 + 0.05 * k as f64);
            let v = hyp2f1_coverage(b, z).unwrap();
            assert!(v < prev, "b={b}, z={z}");
            prev = v;
        }
    }
}

pub fn three_dimensional_constant() {
    let spec = QuadratureSpec::default();
    let v = integrate(|u: f64| 1.0 / (1.0 + u.powf(4.0 / 3.0)), 0.0, f64::INFINITY, &spec).unwrap();
    assert!(rel(4.0 * PI / 3.0 * v, 2f64.sqrt() * PI * PI) < 1e-9);
}

pub const ALL: &[(&str, fn())] = &[
    ("log_gamma_matches_reference", log_gamma_matches_reference),
    ("log_gamma_exact_points", log_gamma_exact_points),
    ("log_gamma_domain", log_gamma_domain),
    (
        "upper_incomplete_gamma_matches_reference",
        upper_incomplete_gamma_matches_reference,
    ),
    (
        "upper_incomplete_gamma_trivial_points",
        upper_incomplete_gamma_trivial_points,
    ),
    ("lower_plus_upper_is_complete", lower_plus_upper_is_complete),
    ("incomplete_gamma_by_quadrature", incomplete_gamma_by_quadrature),
    ("incomplete_gamma_domain", incomplete_gamma_domain),
    (
        "hyp2f1_matches_reference_in_every_regime",
        hyp2f1_matches_reference_in_every_regime,
    ),
    ("hyp2f1_trivial_points", hyp2f1_trivial_points),
    ("hyp2f1_integral_identity", hyp2f1_integral_identity),
    ("hyp2f1_domain", hyp2f1_domain),
    ("quadrature_examples", quadrature_examples),
    (
        "quadrature_reports_best_estimate_on_failure",
        quadrature_reports_best_estimate_on_failure,
    ),
    ("no_nan_escapes", no_nan_escapes),
    ("upper_gamma_recurrence_grid", upper_gamma_recurrence_grid),
    ("upper_gamma_at_zero", upper_gamma_at_zero),
    ("hyp2f1_strictly_decreasing", hyp2f1_strictly_decreasing),
    ("three_dimensional_constant", three_dimensional_constant),
];
