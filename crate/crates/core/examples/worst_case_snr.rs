//! Closed-form worst-case SNR of a fixed activation, checked against random
//! CSI errors and the error that attains it.
//!
//! ```bash
//! cargo run --example worst_case_snr
//! ```

use irs_activation::channel::{complex_normal, realization_rng};
use irs_activation::model::{
    adversarial_error, check_assumption2, optimal_phase_shifts, psi_threshold, snr_given_error, worst_case_ee,
    worst_case_snr, ActivationVector, ChannelEstimate, ComplexCoeff, CsiError, LinkBudget, PowerModel,
    UncertaintySpec,
};

fn main() -> irs_activation::Result<()> {
    let est = ChannelEstimate::from_polar(&[1.0, 0.8, 0.5, 1.2, 0.3], &[0.4, 2.0, -1.0, 3.0, 0.0])?;
    let link = LinkBudget::new(1.0, 0.1)?;
    let power = PowerModel::new(0.01, 0.8, 0.01, 1.5e-3, 0.3e-3)?;
    let x = ActivationVector::from_indices(4, [0, 2]);
    let u = UncertaintySpec::new(0.25)?;

    println!("psi = {:.6}, delta = {}, delta <= min amplitude: {}", psi_threshold(&est), u.delta(), check_assumption2(&est, &u));
    let wc = worst_case_snr(&est, &x, &u, &link)?;
    println!("worst-case SNR {wc:.6}, EE {:.3} bits/s/Hz/W", worst_case_ee(&est, &x, &u, &link, &power)?);

    let phi = optimal_phase_shifts(&est);
    let adv = adversarial_error(&est, &x, &u)?;
    println!(
        "adversarial error norm {:.6}, SNR under it {:.6}",
        adv.euclidean_norm(),
        snr_given_error(&est, &adv, &x, &phi, &link)?
    );

    let mut rng = realization_rng(7, 0);
    let mut lowest = f64::INFINITY;
    for _ in 0..100_000 {
        let raw: Vec<ComplexCoeff> = (0..5).map(|_| complex_normal(&mut rng, 1.0)).collect();
        let err = CsiError { direct: raw[0], cascaded: raw[1..].to_vec() };
        let scale = u.delta() / err.euclidean_norm();
        let err = CsiError {
            direct: ComplexCoeff::new(err.direct.re * scale, err.direct.im * scale),
            cascaded: err.cascaded.iter().map(|c| ComplexCoeff::new(c.re * scale, c.im * scale)).collect(),
        };
        lowest = lowest.min(snr_given_error(&est, &err, &x, &phi, &link)?);
    }
    println!("lowest SNR over 10^5 random errors on the sphere: {lowest:.6} (>= {wc:.6})");
    Ok(())
}
