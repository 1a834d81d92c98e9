//! Command-line front end for the sweep harness.
//!
//! Exit codes: 0 on success, 2 for configuration errors, 3 for runtime errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use irs_activation::harness::{run_sweep, write_csv, write_csv_to, Algorithm, ExperimentConfig, SweepKind};
use irs_activation::Error;

#[derive(Debug, Parser)]
#[command(version, about = "Robust IRS element activation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a sweep and write averaged results as CSV
    Run {
        /// JSON experiment configuration
        #[arg(long, required_unless_present = "use_default")]
        config: Option<PathBuf>,
        /// Use the built-in reference configuration
        #[arg(long = "default", conflicts_with = "config")]
        use_default: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// elements, power or nu
        #[arg(long)]
        sweep: Option<SweepKind>,
        /// Comma-separated subset of dp,exhaustive,baseline
        #[arg(long, value_delimiter = ',')]
        algorithms: Option<Vec<Algorithm>>,
        #[arg(long)]
        realizations: Option<usize>,
    },
    /// Check a configuration without running it
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn exit_code(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_config() { 2 } else { 3 })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Validate { config } => {
            match ExperimentConfig::from_path(&config).and_then(|c| c.validate()) {
                Ok(()) => {
                    println!("{}: ok", config.display());
                    ExitCode::SUCCESS
                }
                Err(e) => exit_code(&e),
            }
        }
        Command::Run {
            config,
            use_default: _,
            seed,
            out,
            sweep,
            algorithms,
            realizations,
        } => {
            let mut cfg = match config {
                Some(path) => match ExperimentConfig::from_path(&path) {
                    Ok(c) => c,
                    Err(e) => return exit_code(&e),
                },
                None => ExperimentConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(s) = sweep {
                if s != cfg.sweep {
                    cfg.sweep_values = None;
                }
                cfg.sweep = s;
            }
            if let Some(a) = algorithms {
                cfg.algorithms = a;
            }
            if let Some(r) = realizations {
                cfg.realizations = r;
            }
            let records = match run_sweep(&cfg) {
                Ok(r) => r,
                Err(e) => return exit_code(&e),
            };
            let written = match out {
                Some(path) => write_csv(&records, &path),
                None => write_csv_to(&records, std::io::stdout().lock()).map_err(|source| Error::Csv {
                    path: "<stdout>".into(),
                    source,
                }),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => exit_code(&e),
            }
        }
    }
}
