use std::cmp::Ordering;

use super::coeff::ComplexCoeff;
use crate::error::{Error, Result};

/// Estimated direct channel `ĥ₀` and cascaded channels `ĥ₁ … ĥ_L`.
///
/// Amplitudes are computed once at construction so that every consumer sees
/// bitwise identical values.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelEstimate {
    direct: ComplexCoeff,
    cascaded: Vec<ComplexCoeff>,
    direct_amplitude: f64,
    amplitudes: Vec<f64>,
}

impl ChannelEstimate {
    pub fn new(direct: ComplexCoeff, cascaded: Vec<ComplexCoeff>) -> Result<Self> {
        if cascaded.is_empty() {
            return Err(Error::domain("an IRS needs at least one element"));
        }
        if !direct.is_finite() || cascaded.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("channel coefficients must be finite"));
        }
        let amplitudes = cascaded.iter().map(ComplexCoeff::amplitude).collect();
        Ok(ChannelEstimate {
            direct_amplitude: direct.amplitude(),
            direct,
            cascaded,
            amplitudes,
        })
    }

    /// Builds an estimate from amplitudes and phases; `amplitudes[0]` and
    /// `phases[0]` describe the direct link.
    pub fn from_polar(amplitudes: &[f64], phases: &[f64]) -> Result<Self> {
        if amplitudes.len() != phases.len() {
            return Err(Error::Dimension {
                expected: amplitudes.len(),
                found: phases.len(),
            });
        }
        if amplitudes.iter().any(|&a| a < 0.0) {
            return Err(Error::domain("amplitudes must be nonnegative"));
        }
        let mut coeffs = amplitudes
            .iter()
            .zip(phases)
            .map(|(&a, &p)| ComplexCoeff::from_polar(a, p));
        let direct = coeffs.next().ok_or_else(|| Error::domain("empty amplitude list"))?;
        ChannelEstimate::new(direct, coeffs.collect())
    }

    /// Number of IRS elements `L`.
    pub fn len(&self) -> usize {
        self.cascaded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cascaded.is_empty()
    }

    pub fn direct(&self) -> ComplexCoeff {
        self.direct
    }

    pub fn cascaded(&self) -> &[ComplexCoeff] {
        &self.cascaded
    }

    pub fn direct_amplitude(&self) -> f64 {
        self.direct_amplitude
    }

    pub fn cascaded_amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    /// `α̂_min`, the smallest amplitude over the direct and cascaded links.
    pub fn min_amplitude(&self) -> f64 {
        self.amplitudes
            .iter()
            .copied()
            .fold(self.direct_amplitude, f64::min)
    }

    /// Element indices ordered by descending cascaded amplitude, ties broken
    /// by ascending index.
    pub fn descending_order(&self) -> Vec<usize> {
        let mut keyed: Vec<(f64, usize)> = self.amplitudes.iter().copied().zip(0..).collect();
        keyed.sort_unstable_by(descending_then_index);
        keyed.into_iter().map(|(_, i)| i).collect()
    }
}

pub(crate) fn descending_then_index(a: &(f64, usize), b: &(f64, usize)) -> Ordering {
    b.0.total_cmp(&a.0).then(a.1.cmp(&b.1))
}

/// A channel-estimation error `h̃`, laid out like [`ChannelEstimate`].
#[derive(Debug, Clone, PartialEq)]
pub struct CsiError {
    pub direct: ComplexCoeff,
    pub cascaded: Vec<ComplexCoeff>,
}

impl CsiError {
    pub fn zero(n_elements: usize) -> Self {
        CsiError {
            direct: ComplexCoeff::ZERO,
            cascaded: vec![ComplexCoeff::ZERO; n_elements],
        }
    }

    pub fn len(&self) -> usize {
        self.cascaded.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cascaded.is_empty()
    }

    /// `‖h̃‖₂` over the direct and all cascaded entries.
    pub fn euclidean_norm(&self) -> f64 {
        let sq = |c: &ComplexCoeff| c.re * c.re + c.im * c.im;
        (sq(&self.direct) + self.cascaded.iter().map(sq).sum::<f64>()).sqrt()
    }
}

/// Radius `δ` of the CSI-uncertainty ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintySpec {
    delta: f64,
}

impl UncertaintySpec {
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta >= 0.0) || !delta.is_finite() {
            return Err(Error::domain(format!("uncertainty radius must be finite and >= 0, got {delta}")));
        }
        Ok(UncertaintySpec { delta })
    }

    /// Perfect CSI.
    pub fn exact() -> Self {
        UncertaintySpec { delta: 0.0 }
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// Binary on/off mask over the IRS elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActivationVector {
    bits: Vec<bool>,
}

impl ActivationVector {
    pub fn new(bits: Vec<bool>) -> Self {
        ActivationVector { bits }
    }

    pub fn all_off(n_elements: usize) -> Self {
        ActivationVector {
            bits: vec![false; n_elements],
        }
    }

    pub fn all_on(n_elements: usize) -> Self {
        ActivationVector {
            bits: vec![true; n_elements],
        }
    }

    /// Bit `ℓ` of `mask` switches element `ℓ`.
    pub fn from_mask(mask: u64, n_elements: usize) -> Self {
        assert!(n_elements <= 64);
        ActivationVector {
            bits: (0..n_elements).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    /// Switches on exactly the listed elements.
    pub fn from_indices(n_elements: usize, on: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; n_elements];
        for i in on {
            bits[i] = true;
        }
        ActivationVector { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_on(&self, element: usize) -> bool {
        self.bits[element]
    }

    pub fn set(&mut self, element: usize, on: bool) {
        self.bits[element] = on;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `L_on(x)`.
    pub fn count_on(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `L_off(x)`.
    pub fn count_off(&self) -> usize {
        self.len() - self.count_on()
    }
}

/// IRS phase shifts in radians, each in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseShiftVector {
    phases: Vec<f64>,
}

impl PhaseShiftVector {
    /// Wraps every entry into `[0, 2π)`.
    pub fn new(phases: Vec<f64>) -> Self {
        PhaseShiftVector {
            phases: phases.into_iter().map(super::wrap_phase).collect(),
        }
    }

    pub fn zeros(n_elements: usize) -> Self {
        PhaseShiftVector {
            phases: vec![0.0; n_elements],
        }
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.phases
    }
}
