use super::{OptimizationResult, ProblemSpec, Solution};
use crate::error::Result;
use crate::model::{f_sum, ActivationVector};

/// Switches every element on.
pub fn all_on_baseline(spec: &ProblemSpec) -> Result<OptimizationResult> {
    spec.validate()?;
    let n = spec.n_elements();
    let x = ActivationVector::all_on(n);
    let f = f_sum(&spec.estimate, &x)?;
    Ok(match spec.evaluate(f, n) {
        None => OptimizationResult::Infeasible,
        Some(e) => OptimizationResult::Feasible(Solution {
            ee_star: e.ee,
            x_star: x,
            m_star: n,
            snr_at_optimum: e.snr,
        }),
    })
}
