use crate::error::{Error, Result};
use crate::model::{f_sum, penalty, snr_from_margin, ActivationVector, ChannelEstimate, LinkBudget, UncertaintySpec};

/// `δ = τ α̂_min`, which always satisfies `δ ≤ α̂_min`.
pub fn derive_uncertainty(est: &ChannelEstimate, tau: f64) -> Result<UncertaintySpec> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::config(format!("tau must lie in [0, 1], got {tau}")));
    }
    UncertaintySpec::new(tau * est.min_amplitude())
}

/// `γ_min = ν γ_worst(1_L; α̂_min)`.
///
/// The all-on mask clears this floor for every `δ = τ α̂_min` with `τ ≤ 1`,
/// so generated problems are always feasible.
pub fn derive_gamma_min(est: &ChannelEstimate, lb: &LinkBudget, nu: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&nu) {
        return Err(Error::config(format!("nu must lie in [0, 1], got {nu}")));
    }
    let n = est.len();
    let f = f_sum(est, &ActivationVector::all_on(n))?;
    let margin = (f - penalty(est.min_amplitude(), n)).max(0.0);
    Ok(nu * snr_from_margin(lb.gamma_bar(), margin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_assumption2, worst_case_snr};

    fn est() -> ChannelEstimate {
        ChannelEstimate::from_polar(&[0.8, 1.2, 0.3, 2.0], &[0.1, 0.2, 0.3, 0.4]).unwrap()
    }

    #[test]
    fn tau_endpoints() {
        let e = est();
        assert_eq!(derive_uncertainty(&e, 0.0).unwrap().delta(), 0.0);
        let u = derive_uncertainty(&e, 1.0).unwrap();
        assert_eq!(u.delta(), 0.3);
        assert!(check_assumption2(&e, &u));
        assert!(matches!(derive_uncertainty(&e, 1.5), Err(Error::Config(_))));
        assert!(derive_uncertainty(&e, -0.1).is_err());
    }

    #[test]
    fn nu_endpoints() {
        let e = est();
        let lb = LinkBudget::new(1.0, 0.1).unwrap();
        assert_eq!(derive_gamma_min(&e, &lb, 0.0).unwrap(), 0.0);
        let g1 = derive_gamma_min(&e, &lb, 1.0).unwrap();
        let u = derive_uncertainty(&e, 1.0).unwrap();
        assert_eq!(g1, worst_case_snr(&e, &ActivationVector::all_on(3), &u, &lb).unwrap());
        assert!(derive_gamma_min(&e, &lb, 1.01).is_err());
    }
}
