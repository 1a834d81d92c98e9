use super::estimate::{ChannelEstimate, UncertaintySpec};

/// Largest admissible uncertainty radius:
/// `ψ = min_M (α̂₀ + Σ_{m≤M} α̂_{σ_m}) / √(1 + M)` with `σ` sorting the
/// cascaded amplitudes in ascending order and `M` ranging over `0..=L`.
pub fn psi_threshold(est: &ChannelEstimate) -> f64 {
    let mut ascending = est.cascaded_amplitudes().to_vec();
    ascending.sort_unstable_by(f64::total_cmp);
    let mut partial = est.direct_amplitude();
    let mut psi = partial;
    for (m, a) in ascending.into_iter().enumerate() {
        partial += a;
        psi = psi.min(partial / ((m + 2) as f64).sqrt());
    }
    psi
}

/// `δ ≤ ψ`: the closed-form worst-case SNR is valid for every mask.
pub fn check_assumption1(est: &ChannelEstimate, u: &UncertaintySpec) -> bool {
    u.delta() <= psi_threshold(est)
}

/// `δ ≤ α̂_min`; implies [`check_assumption1`].
pub fn check_assumption2(est: &ChannelEstimate, u: &UncertaintySpec) -> bool {
    u.delta() <= est.min_amplitude()
}
