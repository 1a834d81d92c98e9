//! Robust on/off activation of intelligent-reflecting-surface (IRS) elements.
//!
//! A single-antenna link is assisted by an IRS with `L` passive elements. Only
//! an estimate of the direct and cascaded channels is known, and the true
//! channel lies in a Euclidean ball of radius `δ` around it. This crate picks
//! which elements to switch on so that the worst-case energy efficiency
//! (worst-case spectral efficiency over total consumed power) is maximized
//! subject to a worst-case SNR floor.
//!
//! The crate is organized as:
//!
//! - [`model`]: closed-form SNR, worst-case SNR, the adversarial CSI error,
//!   the power model and the assumption validators.
//! - [`optimizer`]: the `O(L log L)` dynamic program, the fixed-cardinality
//!   subproblem solver, an exhaustive-search oracle and the all-on baseline.
//! - [`channel`]: random channel-estimate generation (path loss, Rician
//!   fading, ULA line-of-sight steering) with reproducible seeding.
//! - [`harness`]: Monte Carlo sweeps over the number of elements, transmit
//!   power or SNR-floor parameter, with CSV output.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, e.g.
//!
//! ```bash
//! cargo run --release --example dp_vs_exhaustive
//! ```
//!
//! A minimal solve:
//!
//! ```
//! use irs_activation::model::{ChannelEstimate, ComplexCoeff, LinkBudget, PowerModel, UncertaintySpec};
//! use irs_activation::optimizer::{dp_optimize, ProblemSpec};
//!
//! let est = ChannelEstimate::new(
//!     ComplexCoeff::from_polar(1.0, 0.3),
//!     vec![
//!         ComplexCoeff::from_polar(0.8, 1.0),
//!         ComplexCoeff::from_polar(1.5, -2.0),
//!         ComplexCoeff::from_polar(0.4, 0.5),
//!     ],
//! )
//! .unwrap();
//! let spec = ProblemSpec::new(
//!     est,
//!     UncertaintySpec::new(0.2).unwrap(),
//!     1.0,
//!     PowerModel::new(0.01, 0.8, 0.01, 1.5e-3, 0.3e-3).unwrap(),
//!     LinkBudget::new(0.01, 1e-3).unwrap(),
//! )
//! .unwrap();
//! let result = dp_optimize(&spec).unwrap();
//! assert!(result.is_feasible());
//! ```

// `!(x >= 0.0)` style checks are used on purpose to reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod error;
pub mod harness;
pub mod model;
pub mod optimizer;

pub use error::{Error, Result};
