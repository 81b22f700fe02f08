//! Channel and radio parameters shared by the analytical models and the simulator.
//!
//! All powers are linear milliwatts; dBm only appears at the conversion helpers.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Spatial dimension of a deployment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn value(self) -> u32 {
        match self {
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    /// Volume of the unit ball: `π` in 2D, `4π/3` in 3D.
    pub fn unit_ball(self) -> f64 {
        match self {
            Dimension::Two => PI,
            Dimension::Three => 4.0 * PI / 3.0,
        }
    }

    /// Volume (area in 2D) of a ball of radius `r`.
    pub fn ball_volume(self, r: f64) -> f64 {
        self.unit_ball() * r.powi(self.value() as i32)
    }
}

impl TryFrom<u32> for Dimension {
    type Error = Error;

    fn try_from(d: u32) -> Result<Self> {
        match d {
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            other => Err(Error::invalid("dimension", format!("{other} is not 2 or 3"))),
        }
    }
}

impl From<Dimension> for u32 {
    fn from(d: Dimension) -> u32 {
        d.value()
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}D", self.value())
    }
}

/// Single-slope pathloss exponent and Rayleigh fading rate.
///
/// Fading power gains are `Exp(mu)`, so their mean is `1 / mu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    pub alpha: f64,
    pub mu: f64,
}

impl ChannelParams {
    pub fn new(alpha: f64, mu: f64) -> Result<Self> {
        let ch = Self { alpha, mu };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(Error::invalid("alpha", format!("{} must be positive", self.alpha)));
        }
        if !(self.mu > 0.0) || !self.mu.is_finite() {
            return Err(Error::invalid("mu", format!("{} must be positive", self.mu)));
        }
        Ok(())
    }

    /// Errors unless `alpha` exceeds the dimension, the convergence condition
    /// of the interference integrals.
    pub fn check_dimension(&self, dim: Dimension) -> Result<()> {
        if self.alpha <= dim.as_f64() {
            return Err(Error::Divergence {
                alpha: self.alpha,
                dimension: dim.value(),
            });
        }
        Ok(())
    }
}

impl Default for ChannelParams {
    fn default() -> Self {
        Self { alpha: 4.0, mu: 1.0 }
    }
}

/// Transmit power, detection threshold, SIR threshold and the two tail
/// probabilities that size the contention and vulnerability regions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioParams {
    /// Transmit power (mW).
    pub p_t: f64,
    /// Carrier-sense detection threshold (mW).
    pub t_d: f64,
    /// SIR decoding threshold (linear).
    pub beta: f64,
    /// Probability of detecting a node at the detection radius.
    pub eps_d: f64,
    /// Probability that a node at the vulnerability radius causes outage.
    pub eps_v: f64,
}

impl RadioParams {
    pub fn new(p_t: f64, t_d: f64, beta: f64, eps_d: f64, eps_v: f64) -> Result<Self> {
        let r = Self {
            p_t,
            t_d,
            beta,
            eps_d,
            eps_v,
        };
        r.validate()?;
        Ok(r)
    }

    /// 802.11-like parameters: 100 mW, -76 dBm, β = 10, ε_d = 1e-6, ε_v = 1e-2.
    pub fn wifi() -> Self {
        Self {
            p_t: 100.0,
            t_d: dbm_to_mw(-76.0),
            beta: 10.0,
            eps_d: 1e-6,
            eps_v: 1e-2,
        }
    }

    /// 802.15.4-like low-power radio: 1 mW, -60 dBm, otherwise as [`RadioParams::wifi`].
    pub fn low_power() -> Self {
        Self {
            p_t: 1.0,
            t_d: dbm_to_mw(-60.0),
            ..Self::wifi()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("p_t", self.p_t), ("t_d", self.t_d), ("beta", self.beta)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::invalid(name, format!("{v} must be positive and finite")));
            }
        }
        for (name, v) in [("eps_d", self.eps_d), ("eps_v", self.eps_v)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::invalid(name, format!("{v} must lie in (0, 1)")));
            }
        }
        if self.vulnerability_ratio() <= 1.0 {
            return Err(Error::invalid(
                "beta",
                format!(
                    "beta * (1 - eps_v) / eps_v = {} must exceed 1",
                    self.vulnerability_ratio()
                ),
            ));
        }
        Ok(())
    }

    /// `β (1 - ε_v) / ε_v`, the ratio whose `1/α` power scales `r_io` into `r_v`.
    pub fn vulnerability_ratio(&self) -> f64 {
        self.beta * (1.0 - self.eps_v) / self.eps_v
    }

    /// `μ T_d / P_t`: the detection probability at distance `r` is `exp(-k r^α)`.
    pub fn detection_rate(&self, ch: &ChannelParams) -> f64 {
        ch.mu * self.t_d / self.p_t
    }
}

pub fn dbm_to_mw(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

pub fn mw_to_dbm(mw: f64) -> f64 {
    10.0 * mw.log10()
}
