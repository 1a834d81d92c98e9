//! Dynamic program over the number of active elements.
//!
//! For a fixed count `M`, the best mask switches on the `M` elements with the
//! largest cascaded amplitudes. Sorting once and sweeping `M = 0..=L` with a
//! running prefix sum evaluates every subproblem in `O(1)`, and the running
//! maximum realizes `EE*_{≤M} = max(EE*_{≤M−1}, EE*_{=M})`.

use super::{sorted_descending, OptimizationResult, ProblemSpec, Solution};
use crate::error::Result;
use crate::model::ActivationVector;

/// One iteration of the sweep over `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DpStep {
    pub active: usize,
    /// `EE*_{=M}`, `None` when no mask with `M` active elements is feasible.
    pub ee_exactly: Option<f64>,
    /// `EE*_{≤M}` after this iteration.
    pub ee_at_most: Option<f64>,
}

/// Globally optimal activation in `O(L log L)`.
pub fn dp_optimize(spec: &ProblemSpec) -> Result<OptimizationResult> {
    run(spec, None)
}

/// [`dp_optimize`] that also returns the per-`M` values of the recurrence.
pub fn dp_optimize_traced(spec: &ProblemSpec) -> Result<(OptimizationResult, Vec<DpStep>)> {
    let mut trace = Vec::with_capacity(spec.n_elements() + 1);
    let result = run(spec, Some(&mut trace))?;
    Ok((result, trace))
}

fn run(spec: &ProblemSpec, mut trace: Option<&mut Vec<DpStep>>) -> Result<OptimizationResult> {
    spec.validate()?;
    let sorted = sorted_descending(&spec.estimate);

    let mut f = spec.estimate.direct_amplitude();
    // (ee, snr, m)
    let mut best: Option<(f64, f64, usize)> = None;
    for m in 0..=sorted.len() {
        if m > 0 {
            f += sorted[m - 1].0;
        }
        let eval = spec.evaluate(f, m);
        if let Some(e) = eval {
            // strict: equal EE keeps the smaller M
            if best.is_none_or(|(ee, _, _)| e.ee > ee) {
                best = Some((e.ee, e.snr, m));
            }
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(DpStep {
                active: m,
                ee_exactly: eval.map(|e| e.ee),
                ee_at_most: best.map(|b| b.0),
            });
        }
    }

    Ok(match best {
        None => OptimizationResult::Infeasible,
        Some((ee_star, snr_at_optimum, m_star)) => OptimizationResult::Feasible(Solution {
            ee_star,
            x_star: ActivationVector::from_indices(
                sorted.len(),
                sorted[..m_star].iter().map(|&(_, i)| i),
            ),
            m_star,
            snr_at_optimum,
        }),
    })
}
