//! Single-value calculators behind `urbansg calc`.

use crate::error::Result;
use crate::mmp;
use crate::params::{ChannelParams, Dimension, RadioParams};
use crate::ppp::{self, PppParams};

/// `%.9g`-style: 9 significant digits, exponent form outside `[1e-5, 1e9)`.
pub fn format_sig9(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-5..9).contains(&exp) {
        let s = format!("{v:.8e}");
        let (mantissa, e) = s.split_once('e').unwrap_or((&s, "0"));
        let mantissa = trim_zeros(mantissa);
        let e: i32 = e.parse().unwrap_or(0);
        return format!("{mantissa}e{}{:02}", if e < 0 { '-' } else { '+' }, e.abs());
    }
    let decimals = (8 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn ppp(dim: Dimension, intensity: f64, aloha_p: f64, ch: &ChannelParams, beta: f64, d: f64) -> Result<f64> {
    ppp::coverage_ppp(&PppParams::with_aloha(dim, intensity, aloha_p)?, ch, beta, d)
}

pub fn mmp(dim: Dimension, intensity: f64, r: &RadioParams, ch: &ChannelParams, r_io: f64) -> Result<f64> {
    mmp::coverage_csma(intensity, r, ch, r_io, dim)
}

pub fn rd(r: &RadioParams, ch: &ChannelParams) -> f64 {
    mmp::detection_radius(r, ch)
}

pub fn rv(r_io: f64, beta: f64, eps_v: f64, alpha: f64) -> Result<f64> {
    mmp::vulnerability_radius(r_io, beta, eps_v, alpha)
}

pub fn rho_csma(dim: Dimension, intensity: f64, r: &RadioParams, ch: &ChannelParams) -> Result<f64> {
    let r_d = mmp::detection_radius(r, ch);
    let p_d = mmp::prob_detect(r, ch, r_d, dim)?;
    Ok(mmp::mmp_intensity(intensity, r_d, p_d, dim)?.1)
}
