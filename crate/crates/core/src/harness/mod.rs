//! Monte Carlo sweeps over the number of elements, the transmit power or the
//! SNR-floor parameter `ν`, averaged over independent channel realizations.

mod config;
mod csv_io;
mod derive;
mod sweep;

pub use config::{Algorithm, ExperimentConfig, FadingConfig, PathLossConfig, Scenario, SweepKind};
pub use csv_io::{read_csv, write_csv, write_csv_to, CSV_HEADER};
pub use derive::{derive_gamma_min, derive_uncertainty};
pub use sweep::{run_sweep, SweepRecord};
