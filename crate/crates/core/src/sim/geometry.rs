//! Deployment windows and point sets.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};

use crate::error::{Error, Result};
use crate::params::Dimension;

/// Axis-aligned deployment window centered at the origin.
///
/// `z_len == 0` denotes a planar deployment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeploymentBox {
    pub x_len: f64,
    pub y_len: f64,
    pub z_len: f64,
}

impl DeploymentBox {
    pub fn new(x_len: f64, y_len: f64, z_len: f64) -> Result<Self> {
        let b = Self { x_len, y_len, z_len };
        b.validate()?;
        Ok(b)
    }

    pub fn cube(side: f64) -> Result<Self> {
        Self::new(side, side, side)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_len > 0.0 && self.y_len > 0.0) || !self.x_len.is_finite() || !self.y_len.is_finite() {
            return Err(Error::invalid(
                "box",
                format!("x_len = {}, y_len = {} must be positive", self.x_len, self.y_len),
            ));
        }
        if !(self.z_len >= 0.0) || !self.z_len.is_finite() {
            return Err(Error::invalid(
                "box",
                format!("z_len = {} must be nonnegative", self.z_len),
            ));
        }
        Ok(())
    }

    pub fn dimension(&self) -> Dimension {
        if self.z_len == 0.0 {
            Dimension::Two
        } else {
            Dimension::Three
        }
    }

    /// Volume, or area for a planar box.
    pub fn measure(&self) -> f64 {
        match self.dimension() {
            Dimension::Two => self.x_len * self.y_len,
            Dimension::Three => self.x_len * self.y_len * self.z_len,
        }
    }

    pub fn contains(&self, p: &[f64; 3]) -> bool {
        p[0].abs() <= 0.5 * self.x_len && p[1].abs() <= 0.5 * self.y_len && p[2].abs() <= 0.5 * self.z_len
    }

    /// Distance from `p` to the nearest face (planar boxes ignore z).
    pub fn distance_to_border(&self, p: &[f64; 3]) -> f64 {
        let dx = 0.5 * self.x_len - p[0].abs();
        let dy = 0.5 * self.y_len - p[1].abs();
        match self.dimension() {
            Dimension::Two => dx.min(dy),
            Dimension::Three => dx.min(dy).min(0.5 * self.z_len - p[2].abs()),
        }
    }

    pub fn uniform_point<R: Rng + ?Sized>(&self, rng: &mut R) -> [f64; 3] {
        let x = (rng.random::<f64>() - 0.5) * self.x_len;
        let y = (rng.random::<f64>() - 0.5) * self.y_len;
        let z = match self.dimension() {
            Dimension::Two => 0.0,
            Dimension::Three => (rng.random::<f64>() - 0.5) * self.z_len,
        };
        [x, y, z]
    }
}

/// Positions (z = 0 in 2D) with optional Matérn marks.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet {
    pub coords: Vec<[f64; 3]>,
    pub marks: Option<Vec<f64>>,
    pub dimension: Option<Dimension>,
}

impl PointSet {
    pub fn new(dimension: Dimension, coords: Vec<[f64; 3]>) -> Self {
        Self {
            coords,
            marks: None,
            dimension: Some(dimension),
        }
    }

    pub fn with_marks(dimension: Dimension, coords: Vec<[f64; 3]>, marks: Vec<f64>) -> Result<Self> {
        if marks.len() != coords.len() {
            return Err(Error::invalid(
                "marks",
                format!("{} marks for {} points", marks.len(), coords.len()),
            ));
        }
        Ok(Self {
            coords,
            marks: Some(marks),
            dimension: Some(dimension),
        })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

pub(crate) fn norm(p: &[f64; 3]) -> f64 {
    (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()
}

pub(crate) fn distance(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    norm(&[a[0] - b[0], a[1] - b[1], a[2] - b[2]])
}

/// Homogeneous PPP in `b`: Poisson count of mean `intensity · measure`, then
/// i.i.d. uniform positions.
pub fn sample_ppp_with<R: Rng + ?Sized>(b: &DeploymentBox, intensity: f64, rng: &mut R) -> Result<PointSet> {
    b.validate()?;
    if !(intensity >= 0.0) || !intensity.is_finite() {
        return Err(Error::invalid("intensity", format!("{intensity} must be nonnegative")));
    }
    let mean = intensity * b.measure();
    let n = if mean > 0.0 {
        let poisson = Poisson::new(mean).map_err(|e| Error::invalid("intensity", e.to_string()))?;
        poisson.sample(rng) as usize
    } else {
        0
    };
    let coords = (0..n).map(|_| b.uniform_point(rng)).collect();
    Ok(PointSet::new(b.dimension(), coords))
}

pub fn sample_ppp(b: &DeploymentBox, intensity: f64, rng_seed: u64) -> Result<PointSet> {
    sample_ppp_with(b, intensity, &mut ChaCha8Rng::seed_from_u64(rng_seed))
}
