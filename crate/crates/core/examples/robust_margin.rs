//! How the largest admissible uncertainty radius compares with the smallest
//! amplitude, and how the worst case erodes the SNR as the radius grows.
//!
//! ```bash
//! cargo run --example robust_margin
//! ```

use irs_activation::model::{
    check_assumption1, check_assumption2, psi_threshold, worst_case_snr, ActivationVector, ChannelEstimate,
    LinkBudget, UncertaintySpec,
};

fn main() -> irs_activation::Result<()> {
    let est = ChannelEstimate::from_polar(&[5.0, 1.0, 10.0], &[0.0, 0.5, 1.0])?;
    let link = LinkBudget::new(1.0, 1.0)?;
    let psi = psi_threshold(&est);
    println!("min amplitude {}, psi {psi:.6}", est.min_amplitude());
    for k in 0..=6 {
        let u = UncertaintySpec::new(k as f64)?;
        let all_on = ActivationVector::all_on(2);
        let snr = if check_assumption1(&est, &u) {
            format!("{:.4}", worst_case_snr(&est, &all_on, &u, &link)?)
        } else {
            "closed form not valid".into()
        };
        println!(
            "delta {k}: below min amplitude {:<5} below psi {:<5} all-on worst SNR {snr}",
            check_assumption2(&est, &u),
            check_assumption1(&est, &u)
        );
    }
    Ok(())
}
