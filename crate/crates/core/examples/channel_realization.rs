//! One Rician channel estimate for the default geometry.
//!
//! ```bash
//! cargo run --example channel_realization -- 16 2023
//! ```

use irs_activation::channel::{realization_rng, steering_angles};
use irs_activation::harness::ExperimentConfig;
use irs_activation::model::psi_threshold;

fn main() -> irs_activation::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(16);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2023);

    let model = ExperimentConfig::default().scenario(n as f64)?.channel;
    let angles = steering_angles(&model.geometry)?;
    println!("geometry {:?}", model.geometry);
    println!("angles {angles:?}");

    let est = model.sample_estimate_with(n, &mut realization_rng(seed, 0))?;
    let d = est.direct();
    println!("direct   {:+.3e} {:+.3e}i  |h| {:.3e}", d.re, d.im, est.direct_amplitude());
    for (l, c) in est.cascaded().iter().enumerate() {
        println!("elem {l:>3} {:+.3e} {:+.3e}i  |h| {:.3e}", c.re, c.im, c.amplitude());
    }
    println!("min amplitude {:.3e}, psi {:.3e}", est.min_amplitude(), psi_threshold(&est));
    Ok(())
}
