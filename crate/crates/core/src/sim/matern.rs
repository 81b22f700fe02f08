//! Modified Matérn type-II thinning with fading-based detection.
//!
//! Every point gets a uniform mark. For each unordered pair one symmetric
//! fading gain `h_ij ~ Exp(μ)` decides detection: `P_t h_ij r_ij^-α >= T_d`.
//! A point survives iff no detecting neighbor carries a smaller mark, judged
//! against the original set.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Distribution;

use super::geometry::{distance, DeploymentBox, PointSet};
use super::sir::fading;
use crate::error::{Error, Result};
use crate::params::{ChannelParams, RadioParams};

/// Survival flags for caller-supplied marks and pairwise gains.
///
/// `gain(i, j)` is called once per unordered pair with `i < j`.
pub fn matern_mask_with<F: FnMut(usize, usize) -> f64>(
    points: &PointSet,
    marks: &[f64],
    r: &RadioParams,
    ch: &ChannelParams,
    mut gain: F,
) -> Result<Vec<bool>> {
    if marks.len() != points.len() {
        return Err(Error::invalid(
            "marks",
            format!("{} marks for {} points", marks.len(), points.len()),
        ));
    }
    if !(r.p_t > 0.0) || !(r.t_d > 0.0) {
        return Err(Error::invalid("radio", "p_t and t_d must be positive"));
    }
    let n = points.len();
    let mut keep = vec![true; n];
    let ratio = r.t_d / r.p_t;
    for i in 0..n {
        for j in (i + 1)..n {
            let h = gain(i, j);
            let dist = distance(&points.coords[i], &points.coords[j]);
            if h >= ratio * dist.powf(ch.alpha) {
                let loser = if marks[i] > marks[j] { i } else { j };
                keep[loser] = false;
            }
        }
    }
    Ok(keep)
}

/// Marks (drawn unless the set already carries them) and survival flags.
pub fn matern_mask<R: Rng + ?Sized>(
    points: &PointSet,
    r: &RadioParams,
    ch: &ChannelParams,
    rng: &mut R,
) -> Result<(Vec<f64>, Vec<bool>)> {
    ch.validate()?;
    let marks = match &points.marks {
        Some(m) => m.clone(),
        None => (0..points.len()).map(|_| rng.random::<f64>()).collect(),
    };
    let exp = fading(ch)?;
    let keep = matern_mask_with(points, &marks, r, ch, |_, _| exp.sample(rng))?;
    Ok((marks, keep))
}

/// The retained points, carrying their marks.
pub fn matern_thin_with<R: Rng + ?Sized>(
    points: &PointSet,
    r: &RadioParams,
    ch: &ChannelParams,
    rng: &mut R,
) -> Result<PointSet> {
    let (marks, keep) = matern_mask(points, r, ch, rng)?;
    Ok(select(points, &marks, &keep))
}

pub fn matern_thin(points: &PointSet, r: &RadioParams, ch: &ChannelParams, rng_seed: u64) -> Result<PointSet> {
    matern_thin_with(points, r, ch, &mut ChaCha8Rng::seed_from_u64(rng_seed))
}

pub(crate) fn select(points: &PointSet, marks: &[f64], keep: &[bool]) -> PointSet {
    let mut coords = Vec::new();
    let mut kept_marks = Vec::new();
    for (i, &k) in keep.iter().enumerate() {
        if k {
            coords.push(points.coords[i]);
            kept_marks.push(marks[i]);
        }
    }
    PointSet {
        coords,
        marks: Some(kept_marks),
        dimension: points.dimension,
    }
}

/// `(retained, total)` counted over points at least `margin` from the border,
/// whose contention neighborhood is then fully simulated.
pub fn interior_retention(points: &PointSet, keep: &[bool], b: &DeploymentBox, margin: f64) -> (usize, usize) {
    let mut retained = 0;
    let mut total = 0;
    for (p, &k) in points.coords.iter().zip(keep) {
        if b.distance_to_border(p) >= margin {
            total += 1;
            retained += k as usize;
        }
    }
    (retained, total)
}
