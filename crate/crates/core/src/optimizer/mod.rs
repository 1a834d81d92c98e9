//! Global solvers for worst-case EE maximization under an SNR floor.
//!
//! Every solver validates `δ ≤ ψ` once at entry and then evaluates masks with
//! the closed-form worst-case SNR. Infeasibility is reported through
//! [`OptimizationResult::Infeasible`], never as an error.

mod baseline;
mod dp;
mod exhaustive;
mod fixed_m;

pub use baseline::all_on_baseline;
pub use dp::{dp_optimize, dp_optimize_traced, DpStep};
pub use exhaustive::{exhaustive_search, exhaustive_search_with_cap, DEFAULT_EXHAUSTIVE_CAP};
pub use fixed_m::solve_fixed_m;

use crate::error::{Error, Result};
use crate::model::{
    check_assumption1, ee_from_snr, penalty, psi_threshold, snr_from_margin, ActivationVector,
    ChannelEstimate, LinkBudget, PowerModel, UncertaintySpec,
};

/// All data of one robust activation problem.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub estimate: ChannelEstimate,
    pub uncertainty: UncertaintySpec,
    /// Linear worst-case SNR floor `γ_min`.
    pub gamma_min: f64,
    pub power: PowerModel,
    pub link: LinkBudget,
}

impl ProblemSpec {
    pub fn new(
        estimate: ChannelEstimate,
        uncertainty: UncertaintySpec,
        gamma_min: f64,
        power: PowerModel,
        link: LinkBudget,
    ) -> Result<Self> {
        if !(gamma_min >= 0.0) || !gamma_min.is_finite() {
            return Err(Error::domain(format!("SNR floor must be finite and >= 0, got {gamma_min}")));
        }
        Ok(ProblemSpec {
            estimate,
            uncertainty,
            gamma_min,
            power,
            link,
        })
    }

    pub fn n_elements(&self) -> usize {
        self.estimate.len()
    }

    /// Fails with [`Error::Precondition`] when `δ > ψ`.
    pub fn validate(&self) -> Result<()> {
        if check_assumption1(&self.estimate, &self.uncertainty) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "uncertainty radius {:e} exceeds the threshold ψ = {:e}",
                self.uncertainty.delta(),
                psi_threshold(&self.estimate)
            )))
        }
    }

    /// Worst-case SNR and EE of any mask with `f(x) = f` and `n_on` active
    /// elements, or `None` when it misses the SNR floor.
    pub(crate) fn evaluate(&self, f: f64, n_on: usize) -> Option<Evaluation> {
        let margin = (f - penalty(self.uncertainty.delta(), n_on)).max(0.0);
        let snr = snr_from_margin(self.link.gamma_bar(), margin);
        if snr < self.gamma_min {
            return None;
        }
        let power = self.power.total_power_unchecked(n_on, self.n_elements());
        Some(Evaluation {
            ee: ee_from_snr(snr, power),
            snr,
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Evaluation {
    pub ee: f64,
    pub snr: f64,
}

/// An optimal activation and its worst-case figures of merit.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    /// Worst-case EE, bits/s/Hz/W.
    pub ee_star: f64,
    pub x_star: ActivationVector,
    /// Number of active elements in `x_star`.
    pub m_star: usize,
    /// Worst-case SNR of `x_star` (linear).
    pub snr_at_optimum: f64,
}

impl Solution {
    /// Worst-case SE of `x_star`, bits/s/Hz.
    pub fn se(&self) -> f64 {
        crate::model::spectral_efficiency(self.snr_at_optimum)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OptimizationResult {
    Infeasible,
    Feasible(Solution),
}

impl OptimizationResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, OptimizationResult::Feasible(_))
    }

    pub fn solution(&self) -> Option<&Solution> {
        match self {
            OptimizationResult::Feasible(s) => Some(s),
            OptimizationResult::Infeasible => None,
        }
    }

    pub fn ee_star(&self) -> Option<f64> {
        self.solution().map(|s| s.ee_star)
    }

    pub fn m_star(&self) -> Option<usize> {
        self.solution().map(|s| s.m_star)
    }
}

/// Stable descending sort of the cascaded amplitudes as `(amplitude, index)`.
pub(crate) fn sorted_descending(est: &ChannelEstimate) -> Vec<(f64, usize)> {
    let mut keyed: Vec<(f64, usize)> = est.cascaded_amplitudes().iter().copied().zip(0..).collect();
    keyed.sort_unstable_by(crate::model::descending_then_index);
    keyed
}
