//! Runtime of the dynamic program on large arrays.
//!
//! ```bash
//! cargo run --release --example dp_scaling
//! ```

use std::time::Instant;

use irs_activation::harness::{derive_gamma_min, derive_uncertainty};
use irs_activation::model::{ChannelEstimate, LinkBudget, PowerModel};
use irs_activation::optimizer::{dp_optimize, ProblemSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> irs_activation::Result<()> {
    let power = PowerModel::new(0.01, 0.8, 0.01, 1.5e-3, 0.3e-3)?;
    let link = LinkBudget::new(0.01, 1e-15)?;
    for n in [1_000, 10_000, 100_000, 1_000_000] {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let amps: Vec<f64> = (0..=n).map(|_| rng.random_range(0.1..1.0)).collect();
        let phases: Vec<f64> = (0..=n).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
        let est = ChannelEstimate::from_polar(&amps, &phases)?;
        let spec = ProblemSpec::new(
            est.clone(),
            derive_uncertainty(&est, 0.5)?,
            derive_gamma_min(&est, &link, 0.7)?,
            power,
            link,
        )?;
        let start = Instant::now();
        let result = dp_optimize(&spec)?;
        println!("L = {n:>9}: M* = {:>9?} in {:.2?}", result.m_star(), start.elapsed());
    }
    Ok(())
}
