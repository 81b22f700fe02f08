//! Special-function kernel: log-Gamma, incomplete Gamma, the `₂F₁(1, b; b+1; -z)`
//! family, and adaptive quadrature used both internally and as a test oracle.
//!
//! Every function is pure and returns an explicit error outside its domain.

mod gamma;
mod hyp2f1;
mod quad;

pub use gamma::{
    gamma, log_gamma, lower_incomplete_gamma, regularized_lower_gamma, regularized_upper_gamma, upper_incomplete_gamma,
};
pub use hyp2f1::hyp2f1_coverage;
pub use quad::{integrate, integrate_pieces, QuadratureSpec};
