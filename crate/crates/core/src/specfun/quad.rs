//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! error meets `max(abs_tol, rel_tol * |I|)`. A semi-infinite range `[lo, ∞)`
//! is mapped onto `(0, 1]` with `u = lo + (1 - t) / t`, which moves the slow
//! algebraic tail to the `t = 0` end where floating point resolves it.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Tolerances and subdivision budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::invalid("QuadratureSpec", "tolerances must be strictly positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::invalid("QuadratureSpec", "max_subdivisions must be at least 1"));
        }
        Ok(())
    }
}

/// Kronrod abscissae on [-1, 1] (nonnegative half, descending); odd indices are Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Gauss 7-point weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut fv = [0.0; 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let value = kronrod * half;
    let asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    let resabs = (0..15)
        .map(|j| fv[j].abs() * WGK[if j <= 7 { j } else { 14 - j }])
        .sum::<f64>()
        * half.abs();
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Segment { lo, hi, value, error }
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    let first = gauss_kronrod(f, lo, hi);
    let mut heap = BinaryHeap::new();
    let mut total = first.value;
    let mut total_err = first.error;
    // Segments that can no longer be split in floating point keep their error here.
    let mut frozen_value = 0.0;
    let mut frozen_err = 0.0;
    heap.push(first);
    let mut subdivisions = 1;

    loop {
        let tol = spec.abs_tol.max(spec.rel_tol * total.abs());
        if total_err <= tol {
            break;
        }
        if !total.is_finite() {
            return Err(Error::NonConvergence {
                estimate: total,
                abs_error: total_err,
                subdivisions,
            });
        }
        let Some(worst) = heap.pop() else {
            break;
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if subdivisions >= spec.max_subdivisions {
            heap.push(worst);
            return Err(Error::NonConvergence {
                estimate: total,
                abs_error: total_err,
                subdivisions,
            });
        }
        if !(mid > worst.lo && mid < worst.hi) {
            frozen_value += worst.value;
            frozen_err += worst.error;
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let left = gauss_kronrod(f, worst.lo, mid);
        let right = gauss_kronrod(f, mid, worst.hi);
        subdivisions += 1;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // Periodic re-summation keeps the running totals from drifting.
        if subdivisions % 64 == 0 {
            total = heap.iter().map(|s| s.value).sum::<f64>() + frozen_value;
            total_err = heap.iter().map(|s| s.error).sum::<f64>() + frozen_err;
        }
    }

    let value = heap.iter().map(|s| s.value).sum::<f64>() + frozen_value;
    let err: f64 = heap.iter().map(|s| s.error).sum::<f64>() + frozen_err;
    let tol = spec.abs_tol.max(spec.rel_tol * value.abs());
    if err > tol {
        return Err(Error::NonConvergence {
            estimate: value,
            abs_error: err,
            subdivisions,
        });
    }
    Ok(value)
}

/// Integrates `f` over `[lo, hi]`; `hi` may be `f64::INFINITY`.
///
/// Integrable endpoint singularities are fine as long as `f` is finite at the
/// interior sample points. On failure the error carries the best estimate.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if !lo.is_finite() || hi.is_nan() || !(lo < hi) {
        return Err(Error::domain(
            "integrate",
            format!("need finite lo < hi, got [{lo}, {hi}]"),
        ));
    }
    if hi.is_infinite() {
        let mapped = |t: f64| {
            let s = 1.0 / t;
            let fv = f(lo + s - 1.0);
            if fv == 0.0 {
                0.0
            } else {
                fv * s * s
            }
        };
        adaptive(&mapped, 0.0, 1.0, spec)
    } else {
        adaptive(&f, lo, hi, spec)
    }
}

/// Integrates over consecutive breakpoints, e.g. across a kink of a piecewise integrand.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: F, breaks: &[f64], spec: &QuadratureSpec) -> Result<f64> {
    breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| integrate(&f, w[0], w[1], spec))
        .sum()
}
