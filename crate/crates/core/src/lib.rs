//! Coverage probability for dense urban wireless networks.
//!
//! The crate provides analytical coverage models for receivers surrounded by
//! interferers that form a 2D or 3D Poisson point process ([`ppp`]) or a
//! CSMA-style modified Matérn type-II process ([`mmp`]), a Monte Carlo
//! simulator that checks both ([`sim`]), and an experiment runner that writes
//! the resulting curves as CSV ([`scenario`], [`figures`]).
//!
//! ```
//! use urbansg::{ppp, ChannelParams, Dimension};
//!
//! let ch = ChannelParams::new(4.0, 1.0).unwrap();
//! let p3 = ppp::PppParams::new(Dimension::Three, 7.56e-4).unwrap();
//! let p2 = ppp::PppParams::new(Dimension::Two, 1.51e-2).unwrap();
//! let gap = ppp::coverage_ppp(&p3, &ch, 10.0, 2.0).unwrap()
//!     - ppp::coverage_ppp(&p2, &ch, 10.0, 2.0).unwrap();
//! assert!((gap - 0.23).abs() < 0.01);
//! ```

// `!(x > 0.0)` is used on purpose throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod calc;
pub mod error;
pub mod figures;
pub mod mmp;
pub mod params;
pub mod ppp;
pub mod scenario;
pub mod selftest;
pub mod sim;
pub mod specfun;

pub use error::{Error, Result};
pub use params::{dbm_to_mw, mw_to_dbm, ChannelParams, Dimension, RadioParams};
