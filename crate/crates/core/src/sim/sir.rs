//! SIR under Rayleigh fading.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};

use super::geometry::{distance, norm, PointSet};
use crate::error::{Error, Result};
use crate::params::ChannelParams;

/// SIR for given fading gains: `h d^-α / Σ g_i r_i^-α`, `+∞` without interferers.
pub fn sir_with_fading(signal_gain: f64, d: f64, interferers: &[(f64, f64)], alpha: f64) -> f64 {
    let interference: f64 = interferers.iter().map(|&(g, r)| g * r.powf(-alpha)).sum();
    if interference == 0.0 {
        return f64::INFINITY;
    }
    signal_gain * d.powf(-alpha) / interference
}

pub(crate) fn fading(ch: &ChannelParams) -> Result<Exp<f64>> {
    Exp::new(ch.mu).map_err(|e| Error::invalid("mu", e.to_string()))
}

/// Interference at `at` from every point in `points` (skipping index `skip`),
/// each with a fresh `Exp(μ)` gain.
pub(crate) fn interference_at<R: Rng + ?Sized>(
    points: &[[f64; 3]],
    at: &[f64; 3],
    skip: Option<usize>,
    alpha: f64,
    exp: &Exp<f64>,
    rng: &mut R,
) -> f64 {
    let mut total = 0.0;
    for (i, p) in points.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        total += exp.sample(rng) * distance(p, at).powf(-alpha);
    }
    total
}

/// SIR at the origin from a virtual emitter at `emitter_distance`; every point
/// of the set interferes.
pub fn sir_at_origin_with<R: Rng + ?Sized>(
    points: &PointSet,
    emitter_distance: f64,
    ch: &ChannelParams,
    rng: &mut R,
) -> Result<f64> {
    ch.validate()?;
    if !(emitter_distance >= 0.0) {
        return Err(Error::invalid(
            "emitter_distance",
            format!("{emitter_distance} must be nonnegative"),
        ));
    }
    let exp = fading(ch)?;
    let h = exp.sample(rng);
    let interference = interference_at(&points.coords, &[0.0; 3], None, ch.alpha, &exp, rng);
    if interference == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(h * emitter_distance.powf(-ch.alpha) / interference)
}

pub fn sir_at_origin(points: &PointSet, emitter_distance: f64, ch: &ChannelParams, rng_seed: u64) -> Result<f64> {
    sir_at_origin_with(points, emitter_distance, ch, &mut ChaCha8Rng::seed_from_u64(rng_seed))
}

/// `Σ g_i |x_i|^-α` with fresh gains; shared by the PPP curve estimator.
pub(crate) fn origin_interference<R: Rng + ?Sized>(
    points: &PointSet,
    ch: &ChannelParams,
    exp: &Exp<f64>,
    rng: &mut R,
) -> f64 {
    points
        .coords
        .iter()
        .map(|p| exp.sample(rng) * norm(p).powf(-ch.alpha))
        .sum()
}
