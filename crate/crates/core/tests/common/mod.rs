#![allow(dead_code)]

use std::f64::consts::TAU;

use irs_activation::model::{
    ActivationVector, ChannelEstimate, ComplexCoeff, CsiError, LinkBudget, PowerModel,
};
use irs_activation::optimizer::ProblemSpec;
use num_complex::Complex64;
use rand::Rng;

/// Amplitudes spread over two decades, with occasional exact ties.
pub fn random_estimate<R: Rng>(rng: &mut R, n: usize) -> (Vec<f64>, Vec<f64>, ChannelEstimate) {
    let mut amps: Vec<f64> = (0..=n).map(|_| (rng.random_range(-2.3..2.3f64)).exp()).collect();
    if n >= 2 && rng.random_bool(0.25) {
        let (i, j) = (rng.random_range(0..=n), rng.random_range(0..=n));
        amps[i] = amps[j];
    }
    let phases: Vec<f64> = (0..=n).map(|_| rng.random_range(-TAU..2.0 * TAU)).collect();
    let est = ChannelEstimate::from_polar(&amps, &phases).unwrap();
    (amps, phases, est)
}

pub fn random_power<R: Rng>(rng: &mut R) -> PowerModel {
    let p_off = rng.random_range(0.05e-3..1e-3);
    let p_on = p_off * if rng.random_bool(0.2) { 1.0 } else { rng.random_range(1.0..40.0) };
    PowerModel::new(
        rng.random_range(1e-3..1.0),
        rng.random_range(0.3..=1.0),
        rng.random_range(1e-3..2e-2),
        p_on,
        p_off,
    )
    .unwrap()
}

pub fn random_link<R: Rng>(rng: &mut R) -> LinkBudget {
    LinkBudget::new(1.0, 10f64.powf(-rng.random_range(0.0..4.0))).unwrap()
}

pub fn random_mask<R: Rng>(rng: &mut R, n: usize) -> ActivationVector {
    ActivationVector::new((0..n).map(|_| rng.random_bool(0.5)).collect())
}

/// Uniform point in the complex ball of radius `delta` (surface points when
/// `surface` is set).
pub fn random_error<R: Rng>(rng: &mut R, n: usize, delta: f64, surface: bool) -> CsiError {
    let mut g: Vec<f64> = (0..2 * (n + 1))
        .map(|_| {
            let u1: f64 = 1.0 - rng.random::<f64>();
            let u2: f64 = rng.random();
            (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
        })
        .collect();
    let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    let radius = if surface {
        delta
    } else {
        delta * rng.random::<f64>().powf(1.0 / g.len() as f64)
    };
    for v in &mut g {
        *v *= radius / norm;
    }
    let coeffs: Vec<ComplexCoeff> = g.chunks(2).map(|c| ComplexCoeff::new(c[0], c[1])).collect();
    CsiError {
        direct: coeffs[0],
        cascaded: coeffs[1..].to_vec(),
    }
}

/// SNR recomputed straight from polar inputs, independent of the library's
/// phase design and summation.
pub fn oracle_snr(
    amps: &[f64],
    phases: &[f64],
    err: &CsiError,
    x: &ActivationVector,
    phi: &[f64],
    gamma_bar: f64,
) -> f64 {
    let mut s = Complex64::from_polar(amps[0], phases[0]) + Complex64::new(err.direct.re, err.direct.im);
    for l in 0..x.len() {
        if x.is_on(l) {
            let h = Complex64::from_polar(amps[l + 1], phases[l + 1]);
            let e = Complex64::new(err.cascaded[l].re, err.cascaded[l].im);
            s += (h + e) * Complex64::from_polar(1.0, phi[l]);
        }
    }
    gamma_bar * s.norm_sqr()
}

/// Every mask, worst-case EE computed from its definition. `None` for
/// infeasible masks.
pub fn brute_force_ee(spec: &ProblemSpec) -> Vec<(ActivationVector, Option<f64>)> {
    let n = spec.n_elements();
    let amps = spec.estimate.cascaded_amplitudes();
    let gb = spec.link.gamma_bar();
    let delta = spec.uncertainty.delta();
    (0..1u64 << n)
        .map(|mask| {
            let x = ActivationVector::from_mask(mask, n);
            let m = x.count_on();
            let f: f64 = spec.estimate.direct_amplitude()
                + (0..n).filter(|&i| x.is_on(i)).map(|i| amps[i]).sum::<f64>();
            let margin = (f - delta * ((1 + m) as f64).sqrt()).max(0.0);
            let snr = gb * margin * margin;
            let power = spec.power.fixed_power()
                + n as f64 * spec.power.p_off()
                + (spec.power.p_on() - spec.power.p_off()) * m as f64;
            let ee = (snr >= spec.gamma_min).then(|| (1.0 + snr).log2() / power);
            (x, ee)
        })
        .collect()
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
