//! Coverage trials and their aggregation.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use super::geometry::{distance, norm, sample_ppp_with, DeploymentBox, PointSet};
use super::matern::matern_thin_with;
use super::sir::{fading, interference_at, origin_interference};
use crate::error::{Error, Result};
use crate::params::{ChannelParams, Dimension, RadioParams};

/// Give up on a trial after this many empty MMP realizations or receiver
/// placements outside the box.
pub const MAX_RESAMPLES: u32 = 10_000;

/// Empirical coverage with a two-sided confidence interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageEstimate {
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub successes: u64,
    pub trials: u64,
    pub seed: u64,
    /// Realizations discarded because the MMP was empty.
    pub resampled: u64,
}

impl CoverageEstimate {
    /// 95% interval; Wilson when fewer than 5 successes or failures, normal otherwise.
    pub fn from_counts(successes: u64, trials: u64, seed: u64) -> Result<Self> {
        Self::with_confidence(successes, trials, seed, 0.95)
    }

    pub fn with_confidence(successes: u64, trials: u64, seed: u64, confidence: f64) -> Result<Self> {
        if trials == 0 || successes > trials {
            return Err(Error::invalid(
                "trials",
                format!("{successes} successes out of {trials} trials"),
            ));
        }
        if !(confidence > 0.0 && confidence < 1.0) {
            return Err(Error::invalid("confidence", format!("{confidence} must lie in (0, 1)")));
        }
        let n = trials as f64;
        let p = successes as f64 / n;
        let z = z_quantile(confidence);
        let (lo, hi) = if successes < 5 || trials - successes < 5 {
            wilson(p, n, z)
        } else {
            let half = z * (p * (1.0 - p) / n).sqrt();
            (p - half, p + half)
        };
        Ok(Self {
            p_hat: p,
            ci_low: lo.clamp(0.0, 1.0).min(p),
            ci_high: hi.clamp(0.0, 1.0).max(p),
            successes,
            trials,
            seed,
            resampled: 0,
        })
    }

    /// Binomial standard error `sqrt(p (1 - p) / n)`.
    pub fn std_error(&self) -> f64 {
        (self.p_hat * (1.0 - self.p_hat) / self.trials as f64).sqrt()
    }
}

pub fn z_quantile(confidence: f64) -> f64 {
    let normal = Normal::standard();
    normal.inverse_cdf(0.5 + 0.5 * confidence)
}

fn wilson(p: f64, n: f64, z: f64) -> (f64, f64) {
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    (center - half, center + half)
}

/// Generator of trial `index`: ChaCha8 keyed by the master seed, stream = index.
pub fn trial_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// One point of a coverage curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SimScenario {
    /// Virtual emitter at distance `d` from a receiver at the box center.
    Ppp {
        window: DeploymentBox,
        intensity: f64,
        channel: ChannelParams,
        beta: f64,
        d: f64,
    },
    /// Emitter is the retained MMP node nearest the center.
    Csma {
        window: DeploymentBox,
        intensity: f64,
        radio: RadioParams,
        channel: ChannelParams,
        r_io: f64,
    },
}

/// Outcome of one CSMA trial per receiver distance.
#[derive(Debug, Clone, PartialEq)]
pub struct CsmaOutcome {
    pub covered: Vec<bool>,
    pub resampled: u32,
}

fn random_direction<R: Rng + ?Sized>(dim: Dimension, rng: &mut R) -> [f64; 3] {
    match dim {
        Dimension::Two => {
            let theta = rng.random::<f64>() * std::f64::consts::TAU;
            [theta.cos(), theta.sin(), 0.0]
        }
        Dimension::Three => {
            let z = 2.0 * rng.random::<f64>() - 1.0;
            let theta = rng.random::<f64>() * std::f64::consts::TAU;
            let s = (1.0 - z * z).max(0.0).sqrt();
            [s * theta.cos(), s * theta.sin(), z]
        }
    }
}

/// One MMP realization observed at several emitter-receiver distances.
///
/// Samples a PPP, thins it, takes the retained node nearest the center as
/// emitter and, for each `r_io`, places the receiver in a uniform direction
/// (redrawn until inside the box) and tests `SIR > β` against every other
/// retained node with fresh fading.
pub fn run_csma_trial_multi<R: Rng + ?Sized>(
    window: &DeploymentBox,
    intensity: f64,
    r: &RadioParams,
    ch: &ChannelParams,
    r_ios: &[f64],
    rng: &mut R,
) -> Result<CsmaOutcome> {
    ch.validate()?;
    if r_ios.iter().any(|&d| !(d >= 0.0)) {
        return Err(Error::invalid("r_io", "distances must be nonnegative"));
    }
    if !(intensity > 0.0) {
        return Err(Error::invalid("intensity", "a CSMA trial needs a positive intensity"));
    }
    let mut resampled = 0;
    let mmp: PointSet = loop {
        let pts = sample_ppp_with(window, intensity, rng)?;
        let thinned = matern_thin_with(&pts, r, ch, rng)?;
        if !thinned.is_empty() {
            break thinned;
        }
        resampled += 1;
        if resampled >= MAX_RESAMPLES {
            return Err(Error::Degenerate(format!(
                "{resampled} consecutive empty MMP realizations"
            )));
        }
    };
    let emitter_idx = mmp
        .coords
        .iter()
        .enumerate()
        .min_by(|a, b| norm(a.1).total_cmp(&norm(b.1)))
        .map(|(i, _)| i)
        .expect("nonempty");
    let emitter = mmp.coords[emitter_idx];
    let exp = fading(ch)?;
    let dim = window.dimension();
    let mut covered = Vec::with_capacity(r_ios.len());
    for &r_io in r_ios {
        let mut attempts = 0;
        let receiver = loop {
            let u = random_direction(dim, rng);
            let p = [
                emitter[0] + r_io * u[0],
                emitter[1] + r_io * u[1],
                emitter[2] + r_io * u[2],
            ];
            if window.contains(&p) {
                break p;
            }
            attempts += 1;
            if attempts >= MAX_RESAMPLES {
                return Err(Error::Degenerate(format!(
                    "no receiver position at {r_io} m from the emitter fits in the box"
                )));
            }
        };
        let h = exp.sample(rng);
        let interference = interference_at(&mmp.coords, &receiver, Some(emitter_idx), ch.alpha, &exp, rng);
        let sir = if interference == 0.0 {
            f64::INFINITY
        } else {
            h * distance(&emitter, &receiver).powf(-ch.alpha) / interference
        };
        covered.push(sir > r.beta);
    }
    Ok(CsmaOutcome { covered, resampled })
}

/// Single-distance CSMA trial with its own seed; returns whether the receiver is covered.
pub fn run_csma_trial(
    window: &DeploymentBox,
    intensity: f64,
    r: &RadioParams,
    ch: &ChannelParams,
    r_io: f64,
    rng_seed: u64,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok(run_csma_trial_multi(window, intensity, r, ch, &[r_io], &mut rng)?.covered[0])
}

/// PPP trial observed at several emitter distances: one realization, fresh
/// fading, `h d^-α > β I` for each `d`.
pub fn run_ppp_trial_multi<R: Rng + ?Sized>(
    window: &DeploymentBox,
    intensity: f64,
    ch: &ChannelParams,
    beta: f64,
    ds: &[f64],
    rng: &mut R,
) -> Result<Vec<bool>> {
    ch.validate()?;
    let pts = sample_ppp_with(window, intensity, rng)?;
    let exp = fading(ch)?;
    let h = exp.sample(rng);
    let interference = origin_interference(&pts, ch, &exp, rng);
    Ok(ds
        .iter()
        .map(|&d| interference == 0.0 || h * d.powf(-ch.alpha) > beta * interference)
        .collect())
}

struct Tally {
    successes: Vec<u64>,
    resampled: u64,
}

fn tally<F>(points: usize, trials: u64, master_seed: u64, trial: F) -> Result<Tally>
where
    F: Fn(&mut ChaCha8Rng) -> Result<(Vec<bool>, u32)> + Sync,
{
    if trials == 0 {
        return Err(Error::invalid("trials", "need at least one trial"));
    }
    let outcomes: Vec<(Vec<bool>, u32)> = (0..trials)
        .into_par_iter()
        .map(|i| trial(&mut trial_rng(master_seed, i)))
        .collect::<Result<_>>()?;
    let mut successes = vec![0u64; points];
    let mut resampled = 0u64;
    for (hits, extra) in outcomes {
        for (s, h) in successes.iter_mut().zip(hits) {
            *s += h as u64;
        }
        resampled += extra as u64;
    }
    Ok(Tally { successes, resampled })
}

fn finish(t: Tally, trials: u64, master_seed: u64) -> Result<Vec<CoverageEstimate>> {
    t.successes
        .into_iter()
        .map(|s| {
            let mut e = CoverageEstimate::from_counts(s, trials, master_seed)?;
            e.resampled = t.resampled;
            Ok(e)
        })
        .collect()
}

/// PPP coverage curve; every trial observes all distances on one realization,
/// so points are correlated across `ds` but each is an unbiased estimate.
pub fn estimate_ppp_curve(
    window: &DeploymentBox,
    intensity: f64,
    ch: &ChannelParams,
    beta: f64,
    ds: &[f64],
    trials: u64,
    master_seed: u64,
) -> Result<Vec<CoverageEstimate>> {
    window.validate()?;
    let t = tally(ds.len(), trials, master_seed, |rng| {
        Ok((run_ppp_trial_multi(window, intensity, ch, beta, ds, rng)?, 0))
    })?;
    finish(t, trials, master_seed)
}

/// CSMA coverage curve over receiver distances, sharing MMP realizations like
/// [`estimate_ppp_curve`].
pub fn estimate_csma_curve(
    window: &DeploymentBox,
    intensity: f64,
    r: &RadioParams,
    ch: &ChannelParams,
    r_ios: &[f64],
    trials: u64,
    master_seed: u64,
) -> Result<Vec<CoverageEstimate>> {
    window.validate()?;
    let t = tally(r_ios.len(), trials, master_seed, |rng| {
        let o = run_csma_trial_multi(window, intensity, r, ch, r_ios, rng)?;
        Ok((o.covered, o.resampled))
    })?;
    finish(t, trials, master_seed)
}

/// Runs `trials` independent trials of one scenario, trial `i` drawing from
/// [`trial_rng`]`(master_seed, i)`. The result does not depend on the number
/// of worker threads.
pub fn estimate_coverage(scenario: &SimScenario, trials: u64, master_seed: u64) -> Result<CoverageEstimate> {
    let v = match *scenario {
        SimScenario::Ppp {
            window,
            intensity,
            channel,
            beta,
            d,
        } => estimate_ppp_curve(&window, intensity, &channel, beta, &[d], trials, master_seed)?,
        SimScenario::Csma {
            window,
            intensity,
            radio,
            channel,
            r_io,
        } => estimate_csma_curve(&window, intensity, &radio, &channel, &[r_io], trials, master_seed)?,
    };
    Ok(v[0])
}
