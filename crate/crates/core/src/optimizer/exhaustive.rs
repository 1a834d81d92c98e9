//! Exhaustive enumeration of all `2^L` masks, used as a correctness oracle.

use rayon::prelude::*;

use super::{OptimizationResult, ProblemSpec, Solution};
use crate::error::{Error, Result};
use crate::model::ActivationVector;

/// Largest `L` enumerated unless a different cap is requested.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

const CHUNK_BITS: u32 = 12;

#[derive(Debug, Clone, Copy)]
struct Candidate {
    ee: f64,
    snr: f64,
    m: usize,
    mask: u64,
    /// Mask bits re-ordered by descending amplitude, most significant first.
    rank_key: u64,
}

impl Candidate {
    /// Higher EE, then fewer active elements, then the mask that prefers the
    /// larger amplitudes. This matches the dynamic program on ties.
    fn beats(&self, other: &Candidate) -> bool {
        if self.ee != other.ee {
            return self.ee > other.ee;
        }
        if self.m != other.m {
            return self.m < other.m;
        }
        self.rank_key > other.rank_key
    }
}

fn pick(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.beats(&a) { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Exact optimum by enumeration, limited to [`DEFAULT_EXHAUSTIVE_CAP`] elements.
pub fn exhaustive_search(spec: &ProblemSpec) -> Result<OptimizationResult> {
    exhaustive_search_with_cap(spec, DEFAULT_EXHAUSTIVE_CAP)
}

/// Exact optimum by enumeration with a caller-chosen element cap (at most 63).
pub fn exhaustive_search_with_cap(spec: &ProblemSpec, cap: usize) -> Result<OptimizationResult> {
    let n = spec.n_elements();
    let cap = cap.min(63);
    if n > cap {
        return Err(Error::Capacity { elements: n, cap });
    }
    spec.validate()?;

    let amps = spec.estimate.cascaded_amplitudes();
    // summation order shared with f_sum and the dynamic program
    let order = spec.estimate.descending_order();
    let direct = spec.estimate.direct_amplitude();

    let evaluate_mask = |mask: u64| -> Option<Candidate> {
        let mut f = direct;
        let mut rank_key = 0u64;
        for (rank, &i) in order.iter().enumerate() {
            if mask >> i & 1 == 1 {
                f += amps[i];
                rank_key |= 1 << (n - 1 - rank);
            }
        }
        let m = mask.count_ones() as usize;
        spec.evaluate(f, m).map(|e| Candidate {
            ee: e.ee,
            snr: e.snr,
            m,
            mask,
            rank_key,
        })
    };

    let total: u64 = 1 << n;
    let chunk = 1u64 << CHUNK_BITS;
    let best = if total <= chunk {
        (0..total).map(evaluate_mask).fold(None, pick)
    } else {
        (0..total / chunk)
            .into_par_iter()
            .map(|c| (c * chunk..(c + 1) * chunk).map(evaluate_mask).fold(None, pick))
            .reduce(|| None, pick)
    };

    Ok(match best {
        None => OptimizationResult::Infeasible,
        Some(c) => OptimizationResult::Feasible(Solution {
            ee_star: c.ee,
            x_star: ActivationVector::from_mask(c.mask, n),
            m_star: c.m,
            snr_at_optimum: c.snr,
        }),
    })
}
