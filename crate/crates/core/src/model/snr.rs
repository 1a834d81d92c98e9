//! SNR, worst-case SNR and the efficiency metrics built on top of them.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::coeff::{wrap_phase, ComplexCoeff};
use super::estimate::{ActivationVector, ChannelEstimate, CsiError, PhaseShiftVector, UncertaintySpec};
use super::power::{LinkBudget, PowerModel};
use crate::error::{Error, Result};

/// Relative slack under which a negative `f(x) − g(x; δ)` is treated as zero.
const MARGIN_SLACK: f64 = 1e-12;

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// Phase shifts that co-phase every cascaded term with the direct link:
/// `φ_ℓ = (θ̂₀ − θ̂_ℓ) mod 2π`.
pub fn optimal_phase_shifts(est: &ChannelEstimate) -> PhaseShiftVector {
    let theta0 = est.direct().phase();
    PhaseShiftVector::new(est.cascaded().iter().map(|h| theta0 - h.phase()).collect())
}

/// `f(x) = α̂₀ + Σ x_ℓ α̂_ℓ`.
///
/// Terms are accumulated in descending-amplitude order, the same order the
/// dynamic program uses, so that a top-`M` mask evaluates to bitwise the same
/// value on every code path.
pub fn f_sum(est: &ChannelEstimate, x: &ActivationVector) -> Result<f64> {
    check_len(est.len(), x.len())?;
    let amps = est.cascaded_amplitudes();
    Ok(est
        .descending_order()
        .into_iter()
        .filter(|&i| x.is_on(i))
        .fold(est.direct_amplitude(), |f, i| f + amps[i]))
}

/// `g(x; δ) = δ √(1 + Σ x_ℓ)`.
pub fn g_penalty(x: &ActivationVector, u: &UncertaintySpec) -> f64 {
    penalty(u.delta(), x.count_on())
}

pub(crate) fn penalty(delta: f64, n_on: usize) -> f64 {
    delta * ((1 + n_on) as f64).sqrt()
}

/// `f − g`, clamped to zero when it is negative only by rounding noise.
pub(crate) fn robust_margin(f: f64, g: f64) -> Result<f64> {
    let margin = f - g;
    if margin >= 0.0 {
        Ok(margin)
    } else if margin >= -MARGIN_SLACK * f {
        Ok(0.0)
    } else {
        Err(Error::Precondition(format!(
            "f(x) = {f:e} is below the uncertainty penalty g(x; δ) = {g:e}; \
             the radius exceeds the admissible threshold"
        )))
    }
}

pub(crate) fn snr_from_margin(gamma_bar: f64, margin: f64) -> f64 {
    gamma_bar * (margin * margin)
}

/// `log₂(1 + snr)`.
pub fn spectral_efficiency(snr: f64) -> f64 {
    snr.ln_1p() / LN_2
}

pub(crate) fn ee_from_snr(snr: f64, total_power: f64) -> f64 {
    spectral_efficiency(snr) / total_power
}

/// Closed-form worst-case SNR `γ̄ (f(x) − g(x; δ))²`.
///
/// Requires `δ ≤ ψ` (see [`super::check_assumption1`]); a clearly negative
/// `f − g` is reported as [`Error::Precondition`].
pub fn worst_case_snr(
    est: &ChannelEstimate,
    x: &ActivationVector,
    u: &UncertaintySpec,
    lb: &LinkBudget,
) -> Result<f64> {
    let margin = robust_margin(f_sum(est, x)?, g_penalty(x, u))?;
    Ok(snr_from_margin(lb.gamma_bar(), margin))
}

/// The CSI error inside the `δ`-ball that attains the worst-case SNR.
///
/// The direct error and the errors of active elements all get amplitude
/// `δ / √(1 + L_on)` and are phased to oppose the co-phased received signal;
/// inactive elements get no error.
pub fn adversarial_error(
    est: &ChannelEstimate,
    x: &ActivationVector,
    u: &UncertaintySpec,
) -> Result<CsiError> {
    robust_margin(f_sum(est, x)?, g_penalty(x, u))?;
    let n_on = x.count_on();
    let lambda = u.delta() / ((1 + n_on) as f64).sqrt();
    let theta0 = est.direct().phase();
    let phi = optimal_phase_shifts(est);
    let cascaded = phi
        .as_slice()
        .iter()
        .zip(x.bits())
        .map(|(&p, &on)| {
            if on {
                ComplexCoeff::from_polar(lambda, wrap_phase(theta0 - p + PI))
            } else {
                ComplexCoeff::ZERO
            }
        })
        .collect();
    Ok(CsiError {
        direct: ComplexCoeff::from_polar(lambda, wrap_phase(theta0 + PI)),
        cascaded,
    })
}

/// SNR for a given CSI error and phase design:
/// `γ̄ |ĥ₀ + h̃₀ + Σ x_ℓ (ĥ_ℓ + h̃_ℓ) e^{jφ_ℓ}|²`.
pub fn snr_given_error(
    est: &ChannelEstimate,
    err: &CsiError,
    x: &ActivationVector,
    phi: &PhaseShiftVector,
    lb: &LinkBudget,
) -> Result<f64> {
    check_len(est.len(), x.len())?;
    check_len(est.len(), err.len())?;
    check_len(est.len(), phi.len())?;
    let mut total = est.direct().to_complex() + err.direct.to_complex();
    for (((h, e), &p), &on) in est
        .cascaded()
        .iter()
        .zip(&err.cascaded)
        .zip(phi.as_slice())
        .zip(x.bits())
    {
        if on {
            total += (h.to_complex() + e.to_complex()) * Complex64::cis(p);
        }
    }
    Ok(lb.gamma_bar() * total.norm_sqr())
}

/// `log₂(1 + γ_worst)`, in bits/s/Hz.
pub fn worst_case_se(
    est: &ChannelEstimate,
    x: &ActivationVector,
    u: &UncertaintySpec,
    lb: &LinkBudget,
) -> Result<f64> {
    worst_case_snr(est, x, u, lb).map(spectral_efficiency)
}

/// Worst-case SE over total power, in bits/s/Hz per Watt.
pub fn worst_case_ee(
    est: &ChannelEstimate,
    x: &ActivationVector,
    u: &UncertaintySpec,
    lb: &LinkBudget,
    pm: &PowerModel,
) -> Result<f64> {
    let snr = worst_case_snr(est, x, u, lb)?;
    let power = pm.total_power(x.count_on(), x.len())?;
    Ok(ee_from_snr(snr, power))
}
