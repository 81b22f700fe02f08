//! Oracle-equivalence checks run by `urbansg selftest`.
//!
//! Each closed form is compared with an independent evaluation (quadrature of
//! the defining integral, frozen high-precision values, or a small Monte Carlo
//! run).

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crate::error::Result;
use crate::mmp::{self, LensGammaTerms};
use crate::params::{ChannelParams, Dimension, RadioParams};
use crate::ppp::{self, PppParams};
use crate::sim::{self, DeploymentBox};
use crate::specfun::{self, integrate, integrate_pieces, QuadratureSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self { name, passed, detail },
            Err(e) => Self {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn tight() -> QuadratureSpec {
    QuadratureSpec {
        abs_tol: 1e-14,
        rel_tol: 1e-12,
        max_subdivisions: 4000,
    }
}

fn log_gamma_values() -> Result<(bool, String)> {
    const ORACLE: [(f64, f64); 6] = [
        (0.01, 4.5994798780420217016),
        (0.5, 0.57236494292470008707),
        (0.999, 0.00057803853289138023817),
        (1.5, -0.12078223763524522235),
        (3.7, 1.4280723266653881292),
        (50.0, 144.56574394634488601),
    ];
    let mut worst: f64 = 0.0;
    for (a, v) in ORACLE {
        worst = worst.max(rel(specfun::log_gamma(a)?, v));
    }
    Ok((worst < 1e-12, format!("max rel err {worst:.2e}")))
}

fn incomplete_gamma_values() -> Result<(bool, String)> {
    const ORACLE: [(f64, f64, f64); 4] = [
        (0.75, 13.8155, 5.10046031803118165e-7),
        (1.5, 2.5, 0.15225125499165762764),
        (3.3, 4.3, 0.6631610680716528041),
        (5.0, 30.0, 8.698322284947571263e-8),
    ];
    let mut worst: f64 = 0.0;
    for (a, x, v) in ORACLE {
        worst = worst.max(rel(specfun::upper_incomplete_gamma(a, x)?, v));
        let sum = specfun::regularized_lower_gamma(a, x)? + specfun::regularized_upper_gamma(a, x)?;
        worst = worst.max((sum - 1.0).abs());
    }
    Ok((worst < 1e-12, format!("max rel err {worst:.2e}")))
}

fn hyp2f1_vs_quadrature() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for &b in &[0.5, 2.0 / 3.0, 0.75, 1.0, 1.5] {
        for &z in &[0.3, 0.9, 3.0, 99.0, 1e4] {
            // Average of the one-interferer outage kernel over the unit ball.
            let q = integrate(|w: f64| 1.0 / (1.0 + z * w.powf(1.0 / b)), 0.0, 1.0, &tight())?;
            worst = worst.max(rel(specfun::hyp2f1_coverage(b, z)?, q));
        }
    }
    Ok((worst < 1e-9, format!("max rel err {worst:.2e}")))
}

fn interference_constant() -> Result<(bool, String)> {
    let q = ppp::interference_integral_quadrature(Dimension::Three, 4.0, &tight())?;
    let lhs = Dimension::Three.unit_ball() * q;
    let rhs = 2f64.sqrt() * PI * PI;
    let e = rel(lhs, rhs);
    Ok((e < 1e-9, format!("(4π/3)∫ = {lhs:.12}, √2π² = {rhs:.12}")))
}

fn ppp_general_vs_closed() -> Result<(bool, String)> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let mut worst: f64 = 0.0;
    for (dim, rho) in [(Dimension::Three, 7.56e-4), (Dimension::Two, 1.51e-2)] {
        let p = PppParams::new(dim, rho)?;
        for &d in &[0.5, 2.0, 5.0] {
            let closed = ppp::coverage_ppp_closed_form_a4(&p, d, 10.0)?;
            let general = (-ppp::outage_exponent(&p, &ch, 10.0, d)?).exp();
            worst = worst.max((closed - general).abs());
        }
    }
    Ok((worst < 1e-12, format!("max abs diff {worst:.2e}")))
}

fn prob_detect_vs_quadrature() -> Result<(bool, String)> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let mut worst: f64 = 0.0;
    for r in [RadioParams::wifi(), RadioParams::low_power()] {
        let r_d = mmp::detection_radius(&r, &ch);
        let k = r.detection_rate(&ch);
        for dim in [Dimension::Two, Dimension::Three] {
            let q = integrate(
                |x: f64| mmp::dist_density_in_ball(x, r_d, dim) * (-k * x.powf(4.0)).exp(),
                0.0,
                r_d,
                &tight(),
            )?;
            worst = worst.max(rel(mmp::prob_detect(&r, &ch, r_d, dim)?, q));
        }
    }
    Ok((worst < 1e-8, format!("max rel err {worst:.2e}")))
}

/// `P_d'` closed form (3D) against quadrature; `perturb` may alter the
/// incomplete-Gamma constants before evaluation.
pub fn check_pd_prime<F: Fn(&mut LensGammaTerms)>(perturb: F) -> Check {
    let run = || -> Result<(bool, String)> {
        let ch = ChannelParams::new(4.0, 1.0)?;
        let r = RadioParams::wifi();
        let k = r.detection_rate(&ch);
        let mut worst: f64 = 0.0;
        for &r_io in &[10.0, 50.0, 100.0, 200.0] {
            let r_v = mmp::vulnerability_radius(r_io, r.beta, r.eps_v, ch.alpha)?;
            let mut terms = LensGammaTerms::compute(k, ch.alpha, r_io, r_v)?;
            perturb(&mut terms);
            let closed = terms.evaluate(k, ch.alpha, r_io, r_v);
            let q = mmp::prob_detect_prime_quadrature(&r, &ch, r_io, r_v, Dimension::Three, &tight())?;
            worst = worst.max(rel(closed, q));
        }
        Ok((worst < 1e-6, format!("max rel err {worst:.2e}")))
    };
    Check::from_result("P_d' closed form vs quadrature", run())
}

fn prob_beta_vs_radial() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for dim in [Dimension::Two, Dimension::Three] {
        for &r_io in &[10.0, 50.0] {
            let r_v = mmp::vulnerability_radius(r_io, 10.0, 0.01, 4.0)?;
            let q = integrate(
                |x: f64| mmp::dist_density_in_ball(x, r_v, dim) / (1.0 + (x / r_io).powi(4) / 10.0),
                0.0,
                r_v,
                &tight(),
            )?;
            worst = worst.max(rel(mmp::prob_beta(r_io, r_v, 10.0, 4.0, dim)?, q));
        }
    }
    Ok((worst < 1e-9, format!("max rel err {worst:.2e}")))
}

/// The CSMA pipeline with every closed form replaced by quadrature.
pub fn coverage_csma_by_quadrature(
    rho: f64,
    r: &RadioParams,
    ch: &ChannelParams,
    r_io: f64,
    dim: Dimension,
) -> Result<f64> {
    let spec = tight();
    let k = r.detection_rate(ch);
    let r_d = mmp::detection_radius(r, ch);
    let p_d = integrate(
        |x: f64| mmp::dist_density_in_ball(x, r_d, dim) * (-k * x.powf(ch.alpha)).exp(),
        0.0,
        r_d,
        &spec,
    )?;
    let x = rho * dim.ball_volume(r_d) * p_d;
    // Retention: average of exp(-x m) over the mark m.
    let p_csma = if x == 0.0 {
        1.0
    } else {
        // Breakpoints on the decay scale 1/x so the sampler sees the peak.
        let mut breaks = vec![0.0];
        breaks.extend([1.0, 10.0, 100.0].iter().map(|c| c / x).filter(|&b| b < 1.0));
        breaks.push(1.0);
        integrate_pieces(|m: f64| (-x * m).exp(), &breaks, &spec)?
    };
    let r_v = mmp::vulnerability_radius(r_io, r.beta, r.eps_v, ch.alpha)?;
    let p_dp = integrate_pieces(
        |x: f64| mmp::dist_density_lens(x, r_io, r_v, dim) * (-k * x.powf(ch.alpha)).exp(),
        &[0.0, r_v - r_io, r_v + r_io],
        &spec,
    )?;
    let p_beta = integrate(
        |x: f64| mmp::dist_density_in_ball(x, r_v, dim) / (1.0 + (x / r_io).powf(ch.alpha) / r.beta),
        0.0,
        r_v,
        &spec,
    )?;
    Ok((-rho * p_csma * dim.ball_volume(r_v) * p_beta * (1.0 - p_dp)).exp())
}

fn csma_pipeline_vs_quadrature() -> Result<(bool, String)> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let r = RadioParams::wifi();
    let mut worst: f64 = 0.0;
    for (dim, rho) in [(Dimension::Three, 7.56e-4), (Dimension::Two, 1.51e-2)] {
        for &r_io in &[30.0, 100.0] {
            let a = mmp::coverage_csma(rho, &r, &ch, r_io, dim)?;
            let q = coverage_csma_by_quadrature(rho, &r, &ch, r_io, dim)?;
            worst = worst.max(rel(a, q));
        }
    }
    Ok((worst < 1e-6, format!("max rel err {worst:.2e}")))
}

fn ppp_monte_carlo() -> Result<(bool, String)> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let window = DeploymentBox::new(200.0, 200.0, 100.0)?;
    let rho = 1.51e-2 / 100.0;
    let est = sim::estimate_ppp_curve(&window, rho, &ch, 10.0, &[2.0], 2000, 7)?[0];
    let analytic = ppp::coverage_ppp(&PppParams::new(Dimension::Three, rho)?, &ch, 10.0, 2.0)?;
    let z = (est.p_hat - analytic).abs() / (analytic * (1.0 - analytic) / 2000.0).sqrt();
    Ok((z < 4.0, format!("p_hat {:.4} vs {analytic:.4} ({z:.2}σ)", est.p_hat)))
}

fn matern_monte_carlo() -> Result<(bool, String)> {
    // Low-power radios keep the contention range short enough for a small box.
    let ch = ChannelParams::new(4.0, 1.0)?;
    let r = RadioParams::low_power();
    let r_d = mmp::detection_radius(&r, &ch);
    let window = DeploymentBox::cube(4.0 * r_d)?;
    let rho = 2e-5;
    let mut kept = 0;
    let mut total = 0;
    for seed in 0..40u64 {
        let pts = sim::sample_ppp(&window, rho, seed)?;
        let (_, keep) = sim::matern_mask(&pts, &r, &ch, &mut sim::trial_rng(11, seed))?;
        let (k, t) = sim::interior_retention(&pts, &keep, &window, r_d);
        kept += k;
        total += t;
    }
    let p_d = mmp::prob_detect(&r, &ch, r_d, Dimension::Three)?;
    let (p_csma, _) = mmp::mmp_intensity(rho, r_d, p_d, Dimension::Three)?;
    let frac = kept as f64 / total as f64;
    let z = (frac - p_csma).abs() / (p_csma * (1.0 - p_csma) / total as f64).sqrt();
    Ok((
        z < 4.0,
        format!("retained {frac:.4} vs P_csma {p_csma:.4} ({z:.2}σ, n={total})"),
    ))
}

fn determinism() -> Result<(bool, String)> {
    let ch = ChannelParams::new(4.0, 1.0)?;
    let window = DeploymentBox::new(100.0, 100.0, 50.0)?;
    let scenario = sim::SimScenario::Csma {
        window,
        intensity: 2e-4,
        radio: RadioParams::low_power(),
        channel: ch,
        r_io: 5.0,
    };
    let a = sim::estimate_coverage(&scenario, 64, 3)?;
    let b = sim::estimate_coverage(&scenario, 64, 3)?;
    Ok((a == b, format!("p_hat {} twice", a.p_hat)))
}

/// Runs every check with unmodified constants.
pub fn run() -> Vec<Check> {
    let mut checks = vec![
        Check::from_result("log-Gamma vs frozen values", log_gamma_values()),
        Check::from_result("incomplete Gamma vs frozen values", incomplete_gamma_values()),
        Check::from_result("2F1 vs quadrature", hyp2f1_vs_quadrature()),
        Check::from_result("(4π/3) interference integral = √2π²", interference_constant()),
        Check::from_result("PPP general α vs α = 4 closed form", ppp_general_vs_closed()),
        Check::from_result("P_d closed form vs quadrature", prob_detect_vs_quadrature()),
    ];
    checks.push(check_pd_prime(|_| {}));
    checks.extend([
        Check::from_result("P_β vs radial quadrature", prob_beta_vs_radial()),
        Check::from_result(
            "CSMA pipeline vs all-quadrature pipeline",
            csma_pipeline_vs_quadrature(),
        ),
        Check::from_result("PPP Monte Carlo vs analytic", ppp_monte_carlo()),
        Check::from_result("Matérn retention vs P_csma", matern_monte_carlo()),
        Check::from_result("seeded estimates repeat", determinism()),
    ]);
    checks
}
