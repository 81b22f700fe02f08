//! The Gauss hypergeometric family `₂F₁(1, b; b + 1; -z)`.
//!
//! This is the only member of `₂F₁` the coverage formulas need. It equals
//! `(b / z^b) ∫_0^z t^(b-1) / (1 + t) dt`, i.e. the average over a ball of the
//! outage kernel `1 / (1 + w^(1/b))`.
//!
//! Three regimes:
//! * `z <= 0.5`: the defining series `Σ b / (b + n) (-z)^n`.
//! * `0.5 < z <= 4`: Pfaff transform to `(1 + z)^-1 ₂F₁(1, 1; b + 1; z / (1 + z))`.
//! * `z > 4`: expansion in `1 / z` around the complete integral `π / sin(πb)`,
//!   with the pole of `π / sin(πb)` at integer `b` cancelled analytically.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const MAX_TERMS: usize = 100_000;
const DIRECT_LIMIT: f64 = 0.5;
const PFAFF_LIMIT: f64 = 4.0;

/// `₂F₁(1, b; b + 1; -z)` for `b ∈ (0, 2]`, `z >= 0`.
pub fn hyp2f1_coverage(b: f64, z: f64) -> Result<f64> {
    if !(b > 0.0 && b <= 2.0) {
        return Err(Error::domain("hyp2f1_coverage", format!("b = {b} must lie in (0, 2]")));
    }
    if !(z >= 0.0) {
        return Err(Error::domain("hyp2f1_coverage", format!("z = {z} must be nonnegative")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z.is_infinite() {
        return Ok(0.0);
    }
    if z <= DIRECT_LIMIT {
        direct_series(b, z)
    } else if z <= PFAFF_LIMIT {
        pfaff_series(b, z)
    } else {
        large_argument(b, z)
    }
}

fn direct_series(b: f64, z: f64) -> Result<f64> {
    let mut power = 1.0;
    let mut sum = 1.0;
    for n in 1..MAX_TERMS {
        power *= -z;
        let term = power * b / (b + n as f64);
        sum += term;
        if term.abs() <= f64::EPSILON * 0.25 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::SeriesNonConvergence {
        func: "hyp2f1 direct series",
        iterations: MAX_TERMS,
    })
}

fn pfaff_series(b: f64, z: f64) -> Result<f64> {
    let w = z / (1.0 + z);
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let n = n as f64;
        term *= (n + 1.0) / (b + 1.0 + n) * w;
        sum += term;
        if term <= f64::EPSILON * 0.25 * sum {
            return Ok(sum / (1.0 + z));
        }
    }
    Err(Error::SeriesNonConvergence {
        func: "hyp2f1 Pfaff series",
        iterations: MAX_TERMS,
    })
}

/// `π / sin(πε) - 1 / ε`, finite through `ε = 0`.
fn csc_minus_pole(eps: f64) -> f64 {
    let u = PI * eps;
    if u.abs() < 1e-2 {
        let u2 = u * u;
        // u / sin(u) - 1 = u²/6 + 7u⁴/360 + 31u⁶/15120 + 127u⁸/604800
        PI * u * (1.0 / 6.0 + u2 * (7.0 / 360.0 + u2 * (31.0 / 15120.0 + u2 * 127.0 / 604800.0)))
    } else {
        PI / u.sin() - 1.0 / eps
    }
}

/// `(1 - z^-ε) / ε`, finite through `ε = 0` where it tends to `ln z`.
fn log_ratio(eps: f64, ln_z: f64) -> f64 {
    if eps == 0.0 {
        ln_z
    } else {
        -(-eps * ln_z).exp_m1() / eps
    }
}

fn large_argument(b: f64, z: f64) -> Result<f64> {
    // (z^b / b) F = π / sin(πb) - Σ_n (-1)^n z^(b-1-n) / (n + 1 - b)
    let ln_z = z.ln();
    let k = b.round();
    let pole = if k >= 1.0 { Some(k as usize - 1) } else { None };

    let mut integral = match pole {
        Some(n) => {
            // Pair the pole of π/sin(πb) with the n = k - 1 term of the sum.
            let eps = k - b;
            let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
            -sign * (csc_minus_pole(eps) + log_ratio(eps, ln_z))
        }
        None => PI / (PI * b).sin(),
    };

    let mut converged = false;
    for n in 0..MAX_TERMS {
        if Some(n) == pole {
            continue;
        }
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * ((b - 1.0 - nf) * ln_z).exp() / (nf + 1.0 - b);
        integral -= term;
        if nf > b && term.abs() <= f64::EPSILON * 0.25 * integral.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::SeriesNonConvergence {
            func: "hyp2f1 large-argument series",
            iterations: MAX_TERMS,
        });
    }
    Ok(b * (-b * ln_z).exp() * integral)
}
