use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};

use super::geometry::{steering_angles, Geometry, LinkSide, SteeringAngles};
use super::path_loss::{path_loss, PathLossParams};
use super::rng::{complex_normal, SimRng};
use crate::error::{Error, Result};
use crate::model::{ChannelEstimate, ComplexCoeff};

/// Small-scale fading and IRS hardware parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FadingParams {
    /// Linear Rician factor of the Tx→IRS link; `f64::INFINITY` is pure LOS.
    pub rician_k_u: f64,
    /// Linear Rician factor of the IRS→Rx link.
    pub rician_k_v: f64,
    /// Element spacing over wavelength, `d/λ`.
    pub element_spacing_ratio: f64,
    /// Per-element amplitude attenuation `β_ℓ ∈ [0, 1]`.
    pub beta: Vec<f64>,
}

impl FadingParams {
    pub fn new(rician_k_u: f64, rician_k_v: f64, element_spacing_ratio: f64, beta: Vec<f64>) -> Result<Self> {
        let p = FadingParams {
            rician_k_u,
            rician_k_v,
            element_spacing_ratio,
            beta,
        };
        p.validate()?;
        Ok(p)
    }

    /// Every element attenuates by the same `beta`.
    pub fn uniform(rician_k_u: f64, rician_k_v: f64, element_spacing_ratio: f64, beta: f64, n_elements: usize) -> Result<Self> {
        FadingParams::new(rician_k_u, rician_k_v, element_spacing_ratio, vec![beta; n_elements])
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rician_k_u >= 0.0) || !(self.rician_k_v >= 0.0) {
            return Err(Error::domain("Rician factors must be nonnegative"));
        }
        if !(self.element_spacing_ratio > 0.0 && self.element_spacing_ratio.is_finite()) {
            return Err(Error::domain("element spacing must be positive"));
        }
        if let Some(b) = self.beta.iter().find(|b| !(0.0..=1.0).contains(*b)) {
            return Err(Error::domain(format!("IRS attenuation must lie in [0, 1], got {b}")));
        }
        Ok(())
    }
}

/// Weights of the LOS and NLOS parts for Rician factor `k`.
fn rician_weights(k: f64) -> (f64, f64) {
    if k.is_infinite() {
        (1.0, 0.0)
    } else {
        ((k / (1.0 + k)).sqrt(), (1.0 / (1.0 + k)).sqrt())
    }
}

/// ULA line-of-sight vector: entry `ℓ` is `exp(j 2π (d/λ) ℓ sin ϑ cos φ)`,
/// counting from `ℓ = 0`.
pub fn los_vector(
    n_elements: usize,
    spacing_ratio: f64,
    angles: &SteeringAngles,
    side: LinkSide,
) -> Vec<ComplexCoeff> {
    let step = TAU * spacing_ratio * angles.array_cosine(side);
    (0..n_elements)
        .map(|l| ComplexCoeff::from_polar(1.0, step * l as f64))
        .collect()
}

/// Geometry, path-loss and fading description from which estimates are drawn.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelModel {
    pub geometry: Geometry,
    pub direct: PathLossParams,
    pub tx_irs: PathLossParams,
    pub irs_rx: PathLossParams,
    pub fading: FadingParams,
}

impl ChannelModel {
    /// Draws one estimate with its own generator seeded from `seed`.
    pub fn sample_estimate(&self, n_elements: usize, seed: u64) -> Result<ChannelEstimate> {
        self.sample_estimate_with(n_elements, &mut SimRng::seed_from_u64(seed))
    }

    /// Draws one estimate from `rng`.
    ///
    /// The direct coefficient is drawn first, then one (Tx→IRS, IRS→Rx) NLOS
    /// pair per element, so the first `L` elements of a larger draw from the
    /// same stream coincide with a draw of size `L`.
    pub fn sample_estimate_with<R: Rng + ?Sized>(&self, n_elements: usize, rng: &mut R) -> Result<ChannelEstimate> {
        if n_elements == 0 {
            return Err(Error::domain("an IRS needs at least one element"));
        }
        if self.fading.beta.len() != n_elements {
            return Err(Error::Dimension {
                expected: n_elements,
                found: self.fading.beta.len(),
            });
        }
        let angles = steering_angles(&self.geometry)?;
        let rho_direct = path_loss(&self.direct, self.geometry.direct_distance())?;
        let rho_u = path_loss(&self.tx_irs, self.geometry.tx_irs_distance())?;
        let rho_v = path_loss(&self.irs_rx, self.geometry.irs_rx_distance())?;
        let spacing = self.fading.element_spacing_ratio;
        let los_u = los_vector(n_elements, spacing, &angles, LinkSide::Arrival);
        let los_v = los_vector(n_elements, spacing, &angles, LinkSide::Departure);
        let (wu_los, wu_nlos) = rician_weights(self.fading.rician_k_u);
        let (wv_los, wv_nlos) = rician_weights(self.fading.rician_k_v);

        let direct = complex_normal(rng, rho_direct);
        let cascaded = (0..n_elements)
            .map(|l| {
                let nu = complex_normal(rng, 1.0).to_complex();
                let nv = complex_normal(rng, 1.0).to_complex();
                let u = rho_u.sqrt() * (wu_los * los_u[l].to_complex() + wu_nlos * nu);
                let v = rho_v.sqrt() * (wv_los * los_v[l].to_complex() + wv_nlos * nv);
                ComplexCoeff::from(self.fading.beta[l] * u * v)
            })
            .collect();
        ChannelEstimate::new(direct, cascaded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(k: f64, n: usize) -> ChannelModel {
        ChannelModel {
            geometry: Geometry::default(),
            direct: PathLossParams::direct_default(),
            tx_irs: PathLossParams::irs_default(),
            irs_rx: PathLossParams::irs_default(),
            fading: FadingParams::uniform(k, k, 0.5, 0.9, n).unwrap(),
        }
    }

    #[test]
    fn los_entries() {
        let angles = steering_angles(&Geometry::default()).unwrap();
        let v = los_vector(16, 0.5, &angles, LinkSide::Arrival);
        assert_eq!(v[0], ComplexCoeff::new(1.0, 0.0));
        assert!(v.iter().all(|c| (c.amplitude() - 1.0).abs() < 1e-12));

        let broadside = SteeringAngles {
            inclination_aoa: 0.0,
            azimuth_aoa: 0.3,
            inclination_aod: 0.0,
            azimuth_aod: 0.0,
        };
        let v = los_vector(5, 0.5, &broadside, LinkSide::Departure);
        assert!(v.iter().all(|c| *c == ComplexCoeff::new(1.0, 0.0)));

        let endfire = SteeringAngles {
            inclination_aoa: std::f64::consts::FRAC_PI_2,
            azimuth_aoa: 0.0,
            ..broadside
        };
        let v = los_vector(3, 0.5, &endfire, LinkSide::Arrival);
        assert!((v[2].re - 1.0).abs() < 1e-15 && v[2].im.abs() < 1e-15);
    }

    #[test]
    fn pure_los_has_deterministic_amplitudes() {
        let m = model(f64::INFINITY, 12);
        let est = m.sample_estimate(12, 5).unwrap();
        let rho_u = path_loss(&m.tx_irs, m.geometry.tx_irs_distance()).unwrap();
        let rho_v = path_loss(&m.irs_rx, m.geometry.irs_rx_distance()).unwrap();
        let expected = 0.9 * rho_u.sqrt() * rho_v.sqrt();
        for a in est.cascaded_amplitudes() {
            assert!((a / expected - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn same_seed_same_estimate() {
        let m = model(10f64.powf(0.5), 20);
        assert_eq!(m.sample_estimate(20, 42).unwrap(), m.sample_estimate(20, 42).unwrap());
        assert_ne!(m.sample_estimate(20, 42).unwrap(), m.sample_estimate(20, 43).unwrap());
    }

    #[test]
    fn larger_draws_extend_smaller_ones() {
        let small = model(3.0, 6).sample_estimate(6, 9).unwrap();
        let large = model(3.0, 10).sample_estimate(10, 9).unwrap();
        assert_eq!(small.direct(), large.direct());
        assert_eq!(small.cascaded(), &large.cascaded()[..6]);
    }

    #[test]
    fn beta_length_must_match() {
        let m = model(3.0, 6);
        assert!(matches!(m.sample_estimate(7, 0), Err(Error::Dimension { .. })));
        assert!(FadingParams::uniform(1.0, 1.0, 0.5, 1.2, 3).is_err());
    }
}
