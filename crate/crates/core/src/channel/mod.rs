//! Random channel-estimate generation for an IRS-aided link.
//!
//! The direct link is Rayleigh distributed with distance-dependent path loss.
//! The Tx→IRS and IRS→Rx links are Rician, with line-of-sight components
//! steered by a uniform linear array parallel to the global x-axis.

mod fading;
mod geometry;
mod path_loss;
mod rng;

pub use fading::{los_vector, ChannelModel, FadingParams};
pub use geometry::{steering_angles, Geometry, LinkSide, SteeringAngles};
pub use path_loss::{path_loss, PathLossParams};
pub use rng::{complex_normal, realization_rng, SimRng};
