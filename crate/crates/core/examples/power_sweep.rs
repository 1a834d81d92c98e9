//! Mean worst-case EE against the transmit power, written as CSV.
//!
//! ```bash
//! cargo run --release --example power_sweep -- power.csv
//! ```

use irs_activation::harness::{run_sweep, write_csv, ExperimentConfig, SweepKind};

fn main() -> irs_activation::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "power.csv".into());
    let cfg = ExperimentConfig {
        sweep: SweepKind::Power,
        ..ExperimentConfig::default()
    };
    let records = run_sweep(&cfg)?;
    for r in &records {
        println!(
            "{:>6} tau {:.1} {:<10} EE {:>9.3} SE {:>6.3} M {:>5.2}",
            r.sweep_value, r.tau, r.algorithm.name(), r.mean_ee, r.mean_se, r.mean_m_star
        );
    }
    write_csv(&records, out.as_ref())?;
    println!("wrote {out}");
    Ok(())
}
