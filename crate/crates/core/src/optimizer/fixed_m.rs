use super::{sorted_descending, OptimizationResult, ProblemSpec, Solution};
use crate::error::{Error, Result};
use crate::model::ActivationVector;

/// Best mask with exactly `m` active elements: the `m` largest cascaded
/// amplitudes (ties to the lower index), if it clears the SNR floor.
pub fn solve_fixed_m(spec: &ProblemSpec, m: usize) -> Result<OptimizationResult> {
    let n = spec.n_elements();
    if m > n {
        return Err(Error::domain(format!("cannot activate {m} of {n} elements")));
    }
    spec.validate()?;
    let sorted = sorted_descending(&spec.estimate);
    let f = sorted[..m]
        .iter()
        .fold(spec.estimate.direct_amplitude(), |f, &(a, _)| f + a);
    Ok(match spec.evaluate(f, m) {
        None => OptimizationResult::Infeasible,
        Some(e) => OptimizationResult::Feasible(Solution {
            ee_star: e.ee,
            x_star: ActivationVector::from_indices(n, sorted[..m].iter().map(|&(_, i)| i)),
            m_star: m,
            snr_at_optimum: e.snr,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::super::test_support::spec;
    use super::*;
    use crate::model::f_sum;

    #[test]
    fn empty_selection() {
        let s = spec(&[1.0, 2.0, 3.0], 0.25, 0.0, 1.5e-3, 0.3e-3);
        let sol = solve_fixed_m(&s, 0).unwrap().solution().cloned().unwrap();
        assert_eq!(sol.x_star, ActivationVector::all_off(2));
        let expected = (1.0 + s.link.gamma_bar() * 0.75f64.powi(2)).log2()
            / s.power.total_power(0, 2).unwrap();
        assert!((sol.ee_star - expected).abs() <= 1e-14 * expected);
    }

    #[test]
    fn picks_largest_amplitudes() {
        let s = spec(&[1.0, 4.0, 3.0, 2.0, 1.0], 0.0, 0.0, 1.5e-3, 0.3e-3);
        let sol = solve_fixed_m(&s, 2).unwrap().solution().cloned().unwrap();
        assert_eq!(sol.x_star, ActivationVector::from_indices(4, [0, 1]));
        assert_eq!(f_sum(&s.estimate, &sol.x_star).unwrap(), 8.0);
        // brute force over all C(4,2) masks
        let best = (0..16u64)
            .filter(|m| m.count_ones() == 2)
            .map(|m| f_sum(&s.estimate, &ActivationVector::from_mask(m, 4)).unwrap())
            .fold(f64::MIN, f64::max);
        assert_eq!(best, 8.0);
    }

    #[test]
    fn infeasible_above_floor() {
        let mut s = spec(&[1.0, 4.0, 3.0, 2.0, 1.0], 0.5, 0.0, 1.5e-3, 0.3e-3);
        let gb = s.link.gamma_bar();
        s.gamma_min = gb * (11.0 - 0.5 * 5f64.sqrt()).powi(2) * (1.0 + 1e-9);
        assert_eq!(solve_fixed_m(&s, 4).unwrap(), OptimizationResult::Infeasible);
    }

    #[test]
    fn out_of_range() {
        let s = spec(&[1.0, 2.0], 0.0, 0.0, 1.5e-3, 0.3e-3);
        assert!(matches!(solve_fixed_m(&s, 2), Err(Error::Domain(_))));
    }
}
