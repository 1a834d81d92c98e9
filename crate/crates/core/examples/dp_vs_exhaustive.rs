//! The dynamic program next to exhaustive search, with the per-count trace
//! of the recurrence.
//!
//! ```bash
//! cargo run --example dp_vs_exhaustive
//! ```

use irs_activation::channel::realization_rng;
use irs_activation::harness::{derive_gamma_min, derive_uncertainty, ExperimentConfig};
use irs_activation::optimizer::{dp_optimize_traced, exhaustive_search, solve_fixed_m, ProblemSpec};

fn main() -> irs_activation::Result<()> {
    let n = 12;
    let scenario = ExperimentConfig::default().scenario(n as f64)?;
    let est = scenario.channel.sample_estimate_with(n, &mut realization_rng(2023, 0))?;
    let spec = ProblemSpec::new(
        est.clone(),
        derive_uncertainty(&est, 0.5)?,
        derive_gamma_min(&est, &scenario.link, 0.7)?,
        scenario.power,
        scenario.link,
    )?;

    let (dp, trace) = dp_optimize_traced(&spec)?;
    println!("{:>3} {:>14} {:>14}", "M", "EE(=M)", "EE(<=M)");
    for step in &trace {
        let show = |v: Option<f64>| v.map_or("infeasible".to_string(), |e| format!("{e:.6}"));
        println!("{:>3} {:>14} {:>14}", step.active, show(step.ee_exactly), show(step.ee_at_most));
    }

    let ex = exhaustive_search(&spec)?;
    let (a, b) = (dp.solution().unwrap(), ex.solution().unwrap());
    println!("dp:         EE {:.12} M {} mask {:?}", a.ee_star, a.m_star, a.x_star.bits());
    println!("exhaustive: EE {:.12} M {} mask {:?}", b.ee_star, b.m_star, b.x_star.bits());

    let fixed = solve_fixed_m(&spec, 4)?;
    println!("best with exactly 4 on: {:?}", fixed.ee_star());
    Ok(())
}
