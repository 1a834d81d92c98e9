//! Closed-form link model under bounded CSI uncertainty.
//!
//! All powers are in Watts and all SNR values are linear. Energy efficiency
//! is reported in bits/s/Hz per Watt.

mod assumptions;
mod coeff;
mod estimate;
mod power;
mod snr;

pub use assumptions::{check_assumption1, check_assumption2, psi_threshold};
pub use coeff::{wrap_phase, ComplexCoeff};
pub use estimate::{ActivationVector, ChannelEstimate, CsiError, PhaseShiftVector, UncertaintySpec};
pub use power::{dbm_to_watts, LinkBudget, PowerModel};
pub use snr::{
    adversarial_error, f_sum, g_penalty, optimal_phase_shifts, snr_given_error, spectral_efficiency,
    worst_case_ee, worst_case_se, worst_case_snr,
};

pub(crate) use estimate::descending_then_index;
pub(crate) use snr::{ee_from_snr, penalty, snr_from_margin};
