//! CSMA coverage approximation for modified Matérn type-II interferers.
//!
//! The pipeline, for a receiver at distance `r_io` from its emitter:
//!
//! 1. contenders of a node live in a ball of radius `r_d` (the detection radius);
//! 2. a node detects a uniformly placed contender with probability `P_d`, which
//!    gives the retention probability `P_csma` and the MMP intensity `ρ_csma`;
//! 3. only interferers inside the vulnerability radius `r_v` around the receiver
//!    matter; each is outside the emitter's contention domain with probability
//!    `1 - P_d'` and causes outage on its own with probability `P_β`;
//! 4. the retained interferers are treated as a PPP of intensity `ρ_csma`, so
//!    `P_c = exp(-K_csma P_β (1 - P_d'))` with `K_csma = ρ_csma κ_D r_v^D`.
//!
//! 3D quantities use closed forms in incomplete Gamma functions. In 2D the
//! distance density of the emitter-interferer pair involves an arcsine, and
//! `P_d'` is computed by quadrature.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::{ChannelParams, Dimension, RadioParams};
use crate::specfun::{
    hyp2f1_coverage, integrate_pieces, lower_incomplete_gamma, upper_incomplete_gamma, QuadratureSpec,
};

/// Every intermediate quantity of the CSMA pipeline for one `(ρ, r_io)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MmpDerived {
    pub dimension: Dimension,
    /// Detection radius (m).
    pub r_d: f64,
    /// Vulnerability radius (m).
    pub r_v: f64,
    pub p_d: f64,
    pub p_csma: f64,
    /// Intensity of transmitting nodes (nodes/m^D).
    pub rho_csma: f64,
    /// Mean number of transmitters in the vulnerability ball.
    pub k_csma: f64,
    pub p_d_prime: f64,
    pub p_beta: f64,
    pub coverage: f64,
}

/// Radius beyond which a node is detected with probability at most `ε_d`:
/// `r_d = (P_t/T_d · (-ln ε_d)/μ)^(1/α)`.
pub fn detection_radius(r: &RadioParams, ch: &ChannelParams) -> f64 {
    (r.p_t / r.t_d * (-r.eps_d.ln()) / ch.mu).powf(1.0 / ch.alpha)
}

/// Distance at which the mean received power equals `T_d`: `(P_t / (T_d μ))^(1/α)`.
pub fn nominal_detection_range(r: &RadioParams, ch: &ChannelParams) -> f64 {
    (r.p_t / (r.t_d * ch.mu)).powf(1.0 / ch.alpha)
}

/// `E[(P_t h / T_d)^(1/α)]` with `h ~ Exp(μ)`; the fading-averaged range.
pub fn mean_detection_range(r: &RadioParams, ch: &ChannelParams) -> Result<f64> {
    Ok(nominal_detection_range(r, ch) * crate::specfun::gamma(1.0 + 1.0 / ch.alpha)?)
}

/// Probability of detecting a contender placed uniformly in the ball of radius `r_d`.
///
/// `P_d = D γ(D/α, L) / (α L^(D/α))` with `L = μ T_d r_d^α / P_t`.
pub fn prob_detect(r: &RadioParams, ch: &ChannelParams, r_d: f64, dim: Dimension) -> Result<f64> {
    if !(r_d > 0.0) {
        return Err(Error::invalid("r_d", format!("{r_d} must be positive")));
    }
    let s = dim.as_f64() / ch.alpha;
    let l = r.detection_rate(ch) * r_d.powf(ch.alpha);
    if l == 0.0 {
        return Ok(1.0);
    }
    let p = dim.as_f64() * lower_incomplete_gamma(s, l)? / (ch.alpha * l.powf(s));
    Ok(p.clamp(0.0, 1.0))
}

/// Retention probability and MMP intensity: `P_csma = (1 - e^-x) / x`,
/// `ρ_csma = ρ P_csma`, with `x = ρ κ_D r_d^D P_d`.
pub fn mmp_intensity(rho: f64, r_d: f64, p_d: f64, dim: Dimension) -> Result<(f64, f64)> {
    if !(rho >= 0.0) || !(r_d > 0.0) || !(p_d >= 0.0) {
        return Err(Error::invalid(
            "mmp_intensity",
            format!("need rho >= 0, r_d > 0, p_d >= 0 (got {rho}, {r_d}, {p_d})"),
        ));
    }
    let x = rho * dim.ball_volume(r_d) * p_d;
    let p_csma = if x == 0.0 { 1.0 } else { -(-x).exp_m1() / x };
    Ok((p_csma, rho * p_csma))
}

/// Limit of `ρ_csma` as the underlying intensity grows: `1 / (κ_D r_d^D P_d)`.
pub fn saturation_intensity(r_d: f64, p_d: f64, dim: Dimension) -> f64 {
    1.0 / (dim.ball_volume(r_d) * p_d)
}

/// `r_v = r_io (β (1 - ε_v) / ε_v)^(1/α)`; beyond `r_v` a single interferer
/// drops the SIR below `β` with probability at most `ε_v`.
pub fn vulnerability_radius(r_io: f64, beta: f64, eps_v: f64, alpha: f64) -> Result<f64> {
    if !(r_io > 0.0) {
        return Err(Error::invalid("r_io", format!("{r_io} must be positive")));
    }
    if !(eps_v > 0.0 && eps_v < 1.0) {
        return Err(Error::invalid("eps_v", format!("{eps_v} must lie in (0, 1)")));
    }
    let ratio = beta * (1.0 - eps_v) / eps_v;
    if !(ratio > 1.0) {
        return Err(Error::invalid(
            "beta",
            format!("beta (1 - eps_v) / eps_v = {ratio} must exceed 1 so that r_v > r_io"),
        ));
    }
    Ok(r_io * ratio.powf(1.0 / alpha))
}

/// Density of the distance between a ball center and a uniform point of the
/// ball of radius `r_d`: `D r^(D-1) / r_d^D`, zero outside `[0, r_d]`.
pub fn dist_density_in_ball(r: f64, r_d: f64, dim: Dimension) -> f64 {
    if !(r >= 0.0 && r <= r_d) {
        return 0.0;
    }
    let d = dim.value() as i32;
    dim.as_f64() * r.powi(d - 1) / r_d.powi(d)
}

/// Density of `|x_j - x_i|` when `x_j` is uniform in the ball `B(o, r_v)` and
/// `x_i` sits at distance `r_io < r_v` from `o`.
///
/// Inside `[0, r_v - r_io]` the sphere around `x_i` is fully contained and the
/// density matches [`dist_density_in_ball`]. Beyond, only the part of the sphere
/// inside `B(o, r_v)` contributes: a spherical cap in 3D (rational density), an
/// arc in 2D (arcsine). Zero outside `[0, r_v + r_io]`.
pub fn dist_density_lens(r: f64, r_io: f64, r_v: f64, dim: Dimension) -> f64 {
    if !(r >= 0.0) || r > r_v + r_io || !(r_io > 0.0 && r_io < r_v) {
        return 0.0;
    }
    if r <= r_v - r_io {
        return dist_density_in_ball(r, r_v, dim);
    }
    match dim {
        Dimension::Three => 3.0 * r * (r_v - r_io + r) * (r_v + r_io - r) / (4.0 * r_io * r_v.powi(3)),
        Dimension::Two => {
            let c = ((r_v * r_v - r_io * r_io - r * r) / (2.0 * r_io * r)).clamp(-1.0, 1.0);
            2.0 * r * (0.5 * PI + c.asin()) / (PI * r_v * r_v)
        }
    }
}

/// `∫_A^B t^(s-1) e^-t dt`, taken from whichever incomplete Gamma tail is not
/// close to `Γ(s)` to avoid cancellation.
fn gamma_band(s: f64, a: f64, b: f64) -> Result<f64> {
    if a >= s + 1.0 {
        Ok(upper_incomplete_gamma(s, a)? - upper_incomplete_gamma(s, b)?)
    } else {
        Ok(lower_incomplete_gamma(s, b)? - lower_incomplete_gamma(s, a)?)
    }
}

/// Incomplete-Gamma constants of the 3D closed form of `P_d'`.
///
/// `a` and `b` are `μ T_d (r_v ∓ r_io)^α / P_t`; `inner` is `γ(3/α, a)`; `band[m]`
/// is `Γ((m+2)/α, a) - Γ((m+2)/α, b)`, i.e. the differences of the pairs
/// (F, C), (G, D), (H, E) in the usual naming of this formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensGammaTerms {
    pub a: f64,
    pub b: f64,
    pub inner: f64,
    pub band: [f64; 3],
}

impl LensGammaTerms {
    pub fn compute(k: f64, alpha: f64, r_io: f64, r_v: f64) -> Result<Self> {
        let a = k * (r_v - r_io).powf(alpha);
        let b = k * (r_v + r_io).powf(alpha);
        let inner = lower_incomplete_gamma(3.0 / alpha, a)?;
        let mut band = [0.0; 3];
        for (m, slot) in band.iter_mut().enumerate() {
            *slot = gamma_band((m as f64 + 2.0) / alpha, a, b)?;
        }
        Ok(Self { a, b, inner, band })
    }

    /// Evaluates the closed form of `P_d'` (3D) from these constants.
    pub fn evaluate(&self, k: f64, alpha: f64, r_io: f64, r_v: f64) -> f64 {
        let rv3 = r_v.powi(3);
        let ks = |s: f64| k.powf(-s / alpha);
        let contained = 3.0 * self.inner * ks(3.0) / (alpha * rv3);
        let lens = 3.0 / (4.0 * alpha * r_io * rv3)
            * ((r_v * r_v - r_io * r_io) * ks(2.0) * self.band[0] + 2.0 * r_io * ks(3.0) * self.band[1]
                - ks(4.0) * self.band[2]);
        contained + lens
    }
}

fn check_lens(r_io: f64, r_v: f64) -> Result<()> {
    if !(r_io > 0.0) || !(r_v > r_io) || !r_v.is_finite() {
        return Err(Error::invalid(
            "r_v",
            format!("need 0 < r_io < r_v, got r_io = {r_io}, r_v = {r_v}"),
        ));
    }
    Ok(())
}

/// `P_d' = ∫_0^(r_v + r_io) f_lens(r) e^(-μ T_d r^α / P_t) dr`: probability that a
/// node of `B(o, r_v)` is detected by the emitter (so it cannot interfere).
///
/// 3D uses the incomplete-Gamma closed form; 2D integrates numerically.
pub fn prob_detect_prime(r: &RadioParams, ch: &ChannelParams, r_io: f64, r_v: f64, dim: Dimension) -> Result<f64> {
    check_lens(r_io, r_v)?;
    let k = r.detection_rate(ch);
    match dim {
        Dimension::Three => {
            if k == 0.0 {
                return Ok(1.0);
            }
            let terms = LensGammaTerms::compute(k, ch.alpha, r_io, r_v)?;
            Ok(terms.evaluate(k, ch.alpha, r_io, r_v).clamp(0.0, 1.0))
        }
        Dimension::Two => prob_detect_prime_quadrature(r, ch, r_io, r_v, dim, &QuadratureSpec::default()),
    }
}

/// The defining integral of `P_d'` by adaptive quadrature, in either dimension.
pub fn prob_detect_prime_quadrature(
    r: &RadioParams,
    ch: &ChannelParams,
    r_io: f64,
    r_v: f64,
    dim: Dimension,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_lens(r_io, r_v)?;
    let k = r.detection_rate(ch);
    let v = integrate_pieces(
        |x: f64| dist_density_lens(x, r_io, r_v, dim) * (-k * x.powf(ch.alpha)).exp(),
        &[0.0, r_v - r_io, r_v + r_io],
        spec,
    )?;
    Ok(v.clamp(0.0, 1.0))
}

/// Probability that one interferer uniform in `B(o, r_v)` drops the SIR below `β`:
/// `₂F₁(1, D/α; D/α + 1; -(r_v / (r_io β^(1/α)))^α)`.
pub fn prob_beta(r_io: f64, r_v: f64, beta: f64, alpha: f64, dim: Dimension) -> Result<f64> {
    if !(r_io > 0.0) || !(r_v >= 0.0) || !(beta > 0.0) || !(alpha > 0.0) {
        return Err(Error::invalid(
            "prob_beta",
            format!("arguments must be positive (r_io = {r_io}, r_v = {r_v}, beta = {beta}, alpha = {alpha})"),
        ));
    }
    let b = dim.as_f64() / alpha;
    let z = (r_v / r_io).powf(alpha) / beta;
    hyp2f1_coverage(b, z)
}

/// Full pipeline for an underlying intensity `rho` (nodes/m^D; use the planar
/// intensity in 2D) at emitter-receiver distance `r_io`.
pub fn derive(rho: f64, r: &RadioParams, ch: &ChannelParams, r_io: f64, dim: Dimension) -> Result<MmpDerived> {
    r.validate()?;
    ch.validate()?;
    ch.check_dimension(dim)?;
    let r_d = detection_radius(r, ch);
    let p_d = prob_detect(r, ch, r_d, dim)?;
    let (p_csma, rho_csma) = mmp_intensity(rho, r_d, p_d, dim)?;
    let r_v = vulnerability_radius(r_io, r.beta, r.eps_v, ch.alpha)?;
    let k_csma = rho_csma * dim.ball_volume(r_v);
    let p_d_prime = prob_detect_prime(r, ch, r_io, r_v, dim)?;
    let p_beta = prob_beta(r_io, r_v, r.beta, ch.alpha, dim)?;
    let coverage = (-k_csma * p_beta * (1.0 - p_d_prime)).exp();
    Ok(MmpDerived {
        dimension: dim,
        r_d,
        r_v,
        p_d,
        p_csma,
        rho_csma,
        k_csma,
        p_d_prime,
        p_beta,
        coverage,
    })
}

/// `P_c^csma = exp(-K_csma P_β (1 - P_d'))`.
pub fn coverage_csma(rho: f64, r: &RadioParams, ch: &ChannelParams, r_io: f64, dim: Dimension) -> Result<f64> {
    Ok(derive(rho, r, ch, r_io, dim)?.coverage)
}
