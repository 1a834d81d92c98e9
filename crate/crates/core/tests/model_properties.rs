mod common;

use std::f64::consts::TAU;

use common::{oracle_snr, random_error, random_estimate, random_link, random_mask, random_power, rel_diff};
use irs_activation::model::{
    adversarial_error, check_assumption1, check_assumption2, f_sum, g_penalty, optimal_phase_shifts,
    psi_threshold, snr_given_error, worst_case_ee, worst_case_snr, ActivationVector, ChannelEstimate,
    UncertaintySpec,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn brute_force_psi(amps: &[f64]) -> f64 {
    let n = amps.len() - 1;
    (0..1u64 << n)
        .map(|mask| {
            let on: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let f = amps[0] + on.iter().map(|&i| amps[i + 1]).sum::<f64>();
            f / ((1 + on.len()) as f64).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closed_form_lower_bounds_sampled_errors(seed: u64, n in 1usize..10, frac in 0.0..=1.0f64) {
        let mut r = rng(seed);
        let (amps, phases, est) = random_estimate(&mut r, n);
        let u = UncertaintySpec::new(frac * psi_threshold(&est)).unwrap();
        let lb = random_link(&mut r);
        let x = random_mask(&mut r, n);
        let wc = worst_case_snr(&est, &x, &u, &lb).unwrap();
        let phi = optimal_phase_shifts(&est);
        for k in 0..200 {
            let err = random_error(&mut r, n, u.delta(), k % 2 == 0);
            let s = oracle_snr(&amps, &phases, &err, &x, phi.as_slice(), lb.gamma_bar());
            prop_assert!(s >= wc - 1e-9 * wc - 1e-12 * lb.gamma_bar(), "sample {s} below bound {wc}");
        }
    }

    #[test]
    fn adversary_attains_the_bound(seed: u64, n in 1usize..12, frac in 0.0..0.95f64) {
        let mut r = rng(seed);
        let (amps, phases, est) = random_estimate(&mut r, n);
        let u = UncertaintySpec::new(frac * psi_threshold(&est)).unwrap();
        let lb = random_link(&mut r);
        let x = random_mask(&mut r, n);
        let wc = worst_case_snr(&est, &x, &u, &lb).unwrap();
        let err = adversarial_error(&est, &x, &u).unwrap();
        prop_assert!(err.euclidean_norm() <= u.delta() * (1.0 + 1e-12) + 1e-300);
        let phi = optimal_phase_shifts(&est);
        let s = oracle_snr(&amps, &phases, &err, &x, phi.as_slice(), lb.gamma_bar());
        prop_assert!(rel_diff(s, wc) <= 1e-10, "{s} vs {wc}");
        let lib = snr_given_error(&est, &err, &x, &phi, &lb).unwrap();
        prop_assert!(rel_diff(lib, s) <= 1e-12);
    }

    #[test]
    fn snr_given_error_matches_oracle(seed: u64, n in 1usize..16, radius in 0.0..3.0f64) {
        let mut r = rng(seed);
        let (amps, phases, est) = random_estimate(&mut r, n);
        let lb = random_link(&mut r);
        let x = random_mask(&mut r, n);
        let err = random_error(&mut r, n, radius, false);
        let phi: Vec<f64> = (0..n).map(|_| r.random_range(0.0..TAU)).collect();
        let design = irs_activation::model::PhaseShiftVector::new(phi.clone());
        let lib = snr_given_error(&est, &err, &x, &design, &lb).unwrap();
        let want = oracle_snr(&amps, &phases, &err, &x, &phi, lb.gamma_bar());
        prop_assert!((lib - want).abs() <= 1e-12 * (want + lb.gamma_bar()), "{lib} vs {want}");
    }

    #[test]
    fn optimal_phases_cophase_and_normalize(seed: u64, n in 1usize..32) {
        let mut r = rng(seed);
        let (amps, phases, est) = random_estimate(&mut r, n);
        let phi = optimal_phase_shifts(&est);
        let theta0 = phases[0].rem_euclid(TAU);
        for (l, &p) in phi.as_slice().iter().enumerate() {
            prop_assert!((0.0..TAU).contains(&p));
            let rotated = (phases[l + 1] + p - theta0).rem_euclid(TAU);
            prop_assert!(rotated.min(TAU - rotated) < 1e-12);
        }
        let x = ActivationVector::all_on(n);
        let lb = irs_activation::model::LinkBudget::new(1.0, 1.0).unwrap();
        let err = irs_activation::model::CsiError::zero(n);
        let s = snr_given_error(&est, &err, &x, &phi, &lb).unwrap();
        let f: f64 = amps.iter().sum();
        prop_assert!(rel_diff(s, f * f) <= 1e-12);
        let adv = adversarial_error(&est, &x, &UncertaintySpec::new(0.5 * psi_threshold(&est)).unwrap()).unwrap();
        prop_assert!((0.0..TAU).contains(&adv.direct.phase()));
    }

    #[test]
    fn f_and_g_closed_forms(seed: u64, n in 1usize..40, delta in 0.0..5.0f64) {
        let mut r = rng(seed);
        let (amps, _, est) = random_estimate(&mut r, n);
        let x = random_mask(&mut r, n);
        let naive: f64 = amps[0] + (0..n).filter(|&i| x.is_on(i)).map(|i| amps[i + 1]).sum::<f64>();
        prop_assert!(rel_diff(f_sum(&est, &x).unwrap(), naive) <= 1e-13);
        let u = UncertaintySpec::new(delta).unwrap();
        let g = g_penalty(&x, &u);
        prop_assert!(rel_diff(g, delta * ((1 + x.count_on()) as f64).sqrt()) <= 1e-15);
    }

    #[test]
    fn margin_nonnegative_below_psi(seed: u64, n in 1usize..12, frac in 0.0..=1.0f64) {
        let mut r = rng(seed);
        let (_, _, est) = random_estimate(&mut r, n);
        let u = UncertaintySpec::new(frac * psi_threshold(&est)).unwrap();
        for mask in 0..1u64 << n {
            let x = ActivationVector::from_mask(mask, n);
            let f = f_sum(&est, &x).unwrap();
            prop_assert!(f - g_penalty(&x, &u) >= -1e-12 * f);
            prop_assert!(worst_case_snr(&est, &x, &u, &irs_activation::model::LinkBudget::new(1.0, 1.0).unwrap()).is_ok());
        }
    }

    #[test]
    fn psi_matches_subset_enumeration(seed: u64, n in 1usize..12) {
        let mut r = rng(seed);
        let (amps, _, est) = random_estimate(&mut r, n);
        prop_assert!(rel_diff(psi_threshold(&est), brute_force_psi(&amps)) <= 1e-13);
    }

    #[test]
    fn assumption2_implies_assumption1(seed: u64, n in 1usize..20, frac in 0.0..1.5f64) {
        let mut r = rng(seed);
        let (_, _, est) = random_estimate(&mut r, n);
        let u = UncertaintySpec::new(frac * est.min_amplitude()).unwrap();
        prop_assert!(!check_assumption2(&est, &u) || check_assumption1(&est, &u));
    }

    #[test]
    fn worst_case_nonincreasing_in_delta(seed: u64, n in 1usize..16, a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
        let mut r = rng(seed);
        let (_, _, est) = random_estimate(&mut r, n);
        let lb = random_link(&mut r);
        let pm = random_power(&mut r);
        let x = random_mask(&mut r, n);
        let psi = psi_threshold(&est);
        let (lo, hi) = (a.min(b) * psi, a.max(b) * psi);
        let (ulo, uhi) = (UncertaintySpec::new(lo).unwrap(), UncertaintySpec::new(hi).unwrap());
        prop_assert!(worst_case_snr(&est, &x, &uhi, &lb).unwrap() <= worst_case_snr(&est, &x, &ulo, &lb).unwrap());
        prop_assert!(worst_case_ee(&est, &x, &uhi, &lb, &pm).unwrap() <= worst_case_ee(&est, &x, &ulo, &lb, &pm).unwrap());
    }

    #[test]
    fn switching_on_never_lowers_snr_under_assumption2(seed: u64, n in 1usize..24, frac in 0.0..=1.0f64) {
        let mut r = rng(seed);
        let (_, _, est) = random_estimate(&mut r, n);
        let lb = random_link(&mut r);
        let u = UncertaintySpec::new(frac * est.min_amplitude()).unwrap();
        let mut x = random_mask(&mut r, n);
        let l = r.random_range(0..n);
        x.set(l, false);
        let before = worst_case_snr(&est, &x, &u, &lb).unwrap();
        x.set(l, true);
        let after = worst_case_snr(&est, &x, &u, &lb).unwrap();
        prop_assert!(after >= before * (1.0 - 1e-12), "{after} < {before}");
    }
}

#[test]
fn single_element_estimate_is_accepted() {
    let est = ChannelEstimate::from_polar(&[1.0, 2.0], &[0.0, 1.0]).unwrap();
    assert_eq!(est.len(), 1);
    assert_eq!(psi_threshold(&est), 1.0);
}
