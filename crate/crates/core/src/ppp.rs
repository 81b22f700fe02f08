//! Coverage probability under Poisson point process interference.
//!
//! With Rayleigh fading on every link, a receiver at distance `d` from its
//! emitter is covered with probability equal to the Laplace transform of the
//! interference evaluated at `μ β d^α`. For a PPP of intensity `ρ` in `D`
//! dimensions this is
//!
//! ```text
//! P_c = exp(-κ_D ρ d^D β^(D/α) ∫_0^∞ ds / (1 + s^(α/D)))
//! ```
//!
//! with `κ_2 = π` and `κ_3 = 4π/3`. ALOHA access thins the interferers by the
//! per-node transmit probability.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::{ChannelParams, Dimension};
use crate::specfun::{integrate, QuadratureSpec};

/// Interferer process: dimension, intensity (nodes/m^D) and ALOHA transmit probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PppParams {
    pub dimension: Dimension,
    pub intensity: f64,
    pub aloha_p: f64,
}

impl PppParams {
    /// Intensity may be zero (empty process).
    pub fn new(dimension: Dimension, intensity: f64) -> Result<Self> {
        Self::with_aloha(dimension, intensity, 1.0)
    }

    pub fn with_aloha(dimension: Dimension, intensity: f64, aloha_p: f64) -> Result<Self> {
        if !(intensity >= 0.0) || !intensity.is_finite() {
            return Err(Error::invalid("intensity", format!("{intensity} must be nonnegative")));
        }
        if !(aloha_p > 0.0 && aloha_p <= 1.0) {
            return Err(Error::invalid("aloha_p", format!("{aloha_p} must lie in (0, 1]")));
        }
        Ok(Self {
            dimension,
            intensity,
            aloha_p,
        })
    }

    /// Intensity of nodes actually transmitting.
    pub fn effective_intensity(&self) -> f64 {
        self.intensity * self.aloha_p
    }
}

/// `ρ = λ / Z`: spreads a planar intensity uniformly over a height `Z`.
pub fn intensity_from_projection(lambda2d: f64, height: f64) -> Result<f64> {
    if !(lambda2d > 0.0) || !(height > 0.0) {
        return Err(Error::invalid(
            "intensity_from_projection",
            format!("lambda = {lambda2d} and Z = {height} must be positive"),
        ));
    }
    Ok(lambda2d / height)
}

/// `∫_0^∞ ds / (1 + s^(α/D))` via `(π/p) / sin(π/p)`, `p = α/D`.
pub fn interference_integral(dim: Dimension, alpha: f64) -> Result<f64> {
    let ch = ChannelParams { alpha, mu: 1.0 };
    ch.check_dimension(dim)?;
    let p = alpha / dim.as_f64();
    Ok((PI / p) / (PI / p).sin())
}

/// Same integral by adaptive quadrature; the independent route for checks.
pub fn interference_integral_quadrature(dim: Dimension, alpha: f64, spec: &QuadratureSpec) -> Result<f64> {
    let ch = ChannelParams { alpha, mu: 1.0 };
    ch.check_dimension(dim)?;
    let p = alpha / dim.as_f64();
    integrate(|s: f64| 1.0 / (1.0 + s.powf(p)), 0.0, f64::INFINITY, spec)
}

fn check_link(beta: f64, d: f64) -> Result<()> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::invalid("beta", format!("{beta} must be positive")));
    }
    if !(d >= 0.0) || !d.is_finite() {
        return Err(Error::invalid("d", format!("{d} must be nonnegative")));
    }
    Ok(())
}

/// `-ln P_c` through the general-α integral.
pub fn outage_exponent(p: &PppParams, ch: &ChannelParams, beta: f64, d: f64) -> Result<f64> {
    ch.check_dimension(p.dimension)?;
    check_link(beta, d)?;
    let dim = p.dimension.as_f64();
    let c = interference_integral(p.dimension, ch.alpha)?;
    Ok(p.dimension.unit_ball() * p.effective_intensity() * d.powf(dim) * beta.powf(dim / ch.alpha) * c)
}

/// Probability that the SIR at distance `d` from the emitter exceeds `beta`.
///
/// Uses the closed form at `α = 4`. Note the fading rate `μ` cancels: it scales
/// the signal and every interferer alike.
pub fn coverage_ppp(p: &PppParams, ch: &ChannelParams, beta: f64, d: f64) -> Result<f64> {
    ch.check_dimension(p.dimension)?;
    check_link(beta, d)?;
    if ch.alpha == 4.0 {
        return coverage_ppp_closed_form_a4(p, d, beta);
    }
    Ok((-outage_exponent(p, ch, beta, d)?).exp())
}

/// Closed forms at `α = 4`: `exp(-ρ √2 π² d³ β^(3/4))` in 3D and
/// `exp(-λ (π²/2) d² β^(1/2))` in 2D.
pub fn coverage_ppp_closed_form_a4(p: &PppParams, d: f64, beta: f64) -> Result<f64> {
    check_link(beta, d)?;
    let rho = p.effective_intensity();
    let exponent = match p.dimension {
        Dimension::Three => rho * (4.0 / 2f64.powf(1.5)) * PI * PI * d.powi(3) * beta.powf(0.75),
        Dimension::Two => rho * (PI * PI / 2.0) * d * d * beta.sqrt(),
    };
    Ok((-exponent).exp())
}
