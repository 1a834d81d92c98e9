use rayon::prelude::*;

use super::config::{Algorithm, ExperimentConfig, Scenario, SweepKind};
use super::derive::{derive_gamma_min, derive_uncertainty};
use crate::channel::realization_rng;
use crate::error::Result;
use crate::optimizer::{all_on_baseline, dp_optimize, exhaustive_search_with_cap, OptimizationResult, ProblemSpec};

/// One averaged point of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub sweep_var: SweepKind,
    pub sweep_value: f64,
    pub tau: f64,
    pub algorithm: Algorithm,
    /// Mean worst-case EE over feasible realizations, bits/s/Hz/W.
    pub mean_ee: f64,
    /// Mean worst-case SE over feasible realizations, bits/s/Hz.
    pub mean_se: f64,
    pub mean_m_star: f64,
    pub feasibility_rate: f64,
    pub realizations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Outcome {
    ee: f64,
    se: f64,
    m_star: usize,
}

/// Runs every configured sweep point, uncertainty level and algorithm.
///
/// Realization `r` draws its channel estimate from its own stream, shared by
/// all algorithms, all `τ` and all sweep points, so comparisons are made on
/// common random numbers. Only `δ` and `γ_min` are re-derived per case.
pub fn run_sweep(config: &ExperimentConfig) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    let mut records = Vec::new();
    for value in config.sweep_values() {
        let scenario = config.scenario(value)?;
        let per_realization = (0..config.realizations)
            .into_par_iter()
            .map(|r| evaluate_realization(config, &scenario, r as u64))
            .collect::<Result<Vec<_>>>()?;
        records.extend(aggregate(config, value, &per_realization));
        log::info!("{} = {value}: {} realizations done", config.sweep.csv_name(), config.realizations);
    }
    records.sort_by(|a, b| {
        a.sweep_value
            .total_cmp(&b.sweep_value)
            .then(a.tau.total_cmp(&b.tau))
            .then(a.algorithm.name().cmp(b.algorithm.name()))
    });
    Ok(records)
}

/// Outcomes laid out as `[tau][algorithm]`, flattened.
fn evaluate_realization(config: &ExperimentConfig, scenario: &Scenario, index: u64) -> Result<Vec<Option<Outcome>>> {
    let mut rng = realization_rng(config.seed, index);
    let estimate = scenario.channel.sample_estimate_with(scenario.n_elements, &mut rng)?;
    let gamma_min = derive_gamma_min(&estimate, &scenario.link, scenario.nu)?;
    let mut out = Vec::with_capacity(config.tau_list.len() * config.algorithms.len());
    for &tau in &config.tau_list {
        let spec = ProblemSpec::new(
            estimate.clone(),
            derive_uncertainty(&estimate, tau)?,
            gamma_min,
            scenario.power,
            scenario.link,
        )?;
        for &alg in &config.algorithms {
            let result = match alg {
                Algorithm::Dp => dp_optimize(&spec)?,
                Algorithm::Exhaustive => exhaustive_search_with_cap(&spec, config.exhaustive_cap)?,
                Algorithm::Baseline => all_on_baseline(&spec)?,
            };
            out.push(match result {
                OptimizationResult::Infeasible => None,
                OptimizationResult::Feasible(s) => Some(Outcome {
                    ee: s.ee_star,
                    se: s.se(),
                    m_star: s.m_star,
                }),
            });
        }
    }
    Ok(out)
}

fn aggregate(config: &ExperimentConfig, value: f64, per_realization: &[Vec<Option<Outcome>>]) -> Vec<SweepRecord> {
    let n_alg = config.algorithms.len();
    let mut records = Vec::with_capacity(config.tau_list.len() * n_alg);
    for (t, &tau) in config.tau_list.iter().enumerate() {
        for (a, &algorithm) in config.algorithms.iter().enumerate() {
            let (mut count, mut ee, mut se, mut m) = (0usize, 0.0, 0.0, 0.0);
            for o in per_realization.iter().filter_map(|r| r[t * n_alg + a]) {
                count += 1;
                ee += o.ee;
                se += o.se;
                m += o.m_star as f64;
            }
            if count < per_realization.len() {
                log::warn!(
                    "{} = {value}, tau = {tau}, {algorithm}: {} of {} realizations infeasible; excluded from means",
                    config.sweep.csv_name(),
                    per_realization.len() - count,
                    per_realization.len()
                );
            }
            let mean = |s: f64| if count > 0 { s / count as f64 } else { f64::NAN };
            records.push(SweepRecord {
                sweep_var: config.sweep,
                sweep_value: value,
                tau,
                algorithm,
                mean_ee: mean(ee),
                mean_se: mean(se),
                mean_m_star: mean(m),
                feasibility_rate: count as f64 / per_realization.len() as f64,
                realizations: per_realization.len(),
            });
        }
    }
    records
}
