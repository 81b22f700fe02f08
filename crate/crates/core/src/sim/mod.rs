//! Monte Carlo ground truth: PPP sampling in a finite box, Rayleigh fading,
//! Matérn type-II thinning and coverage estimation.
//!
//! Trials are independent. Trial `i` of a run seeded with `s` draws from a
//! ChaCha8 stream keyed by `(s, i)`, so estimates are bit-identical whatever
//! the thread count.

mod estimate;
mod geometry;
mod matern;
mod sir;

pub use estimate::{
    estimate_coverage, estimate_csma_curve, estimate_ppp_curve, run_csma_trial, run_csma_trial_multi,
    run_ppp_trial_multi, trial_rng, z_quantile, CoverageEstimate, CsmaOutcome, SimScenario, MAX_RESAMPLES,
};
pub use geometry::{sample_ppp, sample_ppp_with, DeploymentBox, PointSet};
pub use matern::{interior_retention, matern_mask, matern_mask_with, matern_thin, matern_thin_with};
pub use sir::{sir_at_origin, sir_at_origin_with, sir_with_fading};
