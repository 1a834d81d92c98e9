//! JSON experiment configuration. Every field is optional; missing fields
//! take the reference scenario values.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::{ChannelModel, FadingParams, Geometry, PathLossParams};
use crate::error::{Error, Result};
use crate::model::{dbm_to_watts, LinkBudget, PowerModel};
use crate::optimizer::DEFAULT_EXHAUSTIVE_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Elements,
    Power,
    Nu,
}

impl SweepKind {
    /// Value of the `sweep_var` CSV column.
    pub fn csv_name(self) -> &'static str {
        match self {
            SweepKind::Elements => "elements",
            SweepKind::Power => "power_dbm",
            SweepKind::Nu => "nu",
        }
    }

    pub fn from_csv_name(s: &str) -> Option<Self> {
        match s {
            "elements" => Some(SweepKind::Elements),
            "power_dbm" => Some(SweepKind::Power),
            "nu" => Some(SweepKind::Nu),
            _ => None,
        }
    }

    /// Default grid: `L ∈ {4, 6, …, 40}`, `p ∈ {−10, −5, …, 40}` dBm or
    /// `ν ∈ {0, 0.1, …, 1}`.
    pub fn default_values(self) -> Vec<f64> {
        match self {
            SweepKind::Elements => (2..=20).map(|k| (2 * k) as f64).collect(),
            SweepKind::Power => (-2..=8).map(|k| (5 * k) as f64).collect(),
            SweepKind::Nu => (0..=10).map(|k| k as f64 / 10.0).collect(),
        }
    }
}

impl FromStr for SweepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elements" => Ok(SweepKind::Elements),
            "power" | "power_dbm" => Ok(SweepKind::Power),
            "nu" => Ok(SweepKind::Nu),
            _ => Err(Error::config(format!("unknown sweep `{s}` (expected elements, power or nu)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Baseline,
    Dp,
    Exhaustive,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Baseline => "baseline",
            Algorithm::Dp => "dp",
            Algorithm::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "dp" => Ok(Algorithm::Dp),
            "exhaustive" => Ok(Algorithm::Exhaustive),
            "baseline" => Ok(Algorithm::Baseline),
            other => Err(Error::config(format!(
                "unknown algorithm `{other}` (expected dp, exhaustive or baseline)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PathLossConfig {
    pub direct: PathLossParams,
    pub tx_irs: PathLossParams,
    pub irs_rx: PathLossParams,
}

impl Default for PathLossConfig {
    fn default() -> Self {
        PathLossConfig {
            direct: PathLossParams::direct_default(),
            tx_irs: PathLossParams::irs_default(),
            irs_rx: PathLossParams::irs_default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FadingConfig {
    pub rician_k_u_db: f64,
    pub rician_k_v_db: f64,
    pub element_spacing_ratio: f64,
    /// Attenuation shared by all elements.
    pub beta: f64,
}

impl Default for FadingConfig {
    fn default() -> Self {
        FadingConfig {
            rician_k_u_db: 5.0,
            rician_k_v_db: 5.0,
            element_spacing_ratio: 0.5,
            beta: 0.9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub geometry: Geometry,
    pub path_loss: PathLossConfig,
    pub fading: FadingConfig,
    /// Number of IRS elements when not swept.
    pub elements: usize,
    /// Transmit power when not swept.
    pub transmit_power_dbm: f64,
    pub noise_power_dbm: f64,
    pub eta: f64,
    pub static_power_mw: f64,
    pub p_on_mw: f64,
    pub p_off_mw: f64,
    /// Uncertainty radii as fractions of `α̂_min`.
    pub tau_list: Vec<f64>,
    /// SNR-floor parameter when not swept.
    pub nu: f64,
    pub sweep: SweepKind,
    /// Grid of the swept variable; `None` selects [`SweepKind::default_values`].
    pub sweep_values: Option<Vec<f64>>,
    pub realizations: usize,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub exhaustive_cap: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            geometry: Geometry::default(),
            path_loss: PathLossConfig::default(),
            fading: FadingConfig::default(),
            elements: 20,
            transmit_power_dbm: 10.0,
            noise_power_dbm: -120.0,
            eta: 0.8,
            static_power_mw: 10.0,
            p_on_mw: 1.5,
            p_off_mw: 0.3,
            tau_list: vec![0.0, 0.5, 1.0],
            nu: 0.7,
            sweep: SweepKind::Elements,
            sweep_values: None,
            realizations: 1000,
            seed: 2023,
            algorithms: vec![Algorithm::Dp, Algorithm::Baseline],
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

/// Everything needed to evaluate one sweep point.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub n_elements: usize,
    pub nu: f64,
    pub channel: ChannelModel,
    pub power: PowerModel,
    pub link: LinkBudget,
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

fn as_config_error(e: Error) -> Error {
    match e {
        Error::Config(_) => e,
        other => Error::Config(other.to_string()),
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::config(e.to_string()))
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::config(format!("cannot read {}: {e}", path.display()))
        })?;
        Self::from_json(&text).map_err(|e| Error::config(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn sweep_values(&self) -> Vec<f64> {
        self.sweep_values
            .clone()
            .unwrap_or_else(|| self.sweep.default_values())
    }

    fn element_counts(&self) -> Vec<usize> {
        match self.sweep {
            SweepKind::Elements => self.sweep_values().iter().map(|&v| v as usize).collect(),
            _ => vec![self.elements],
        }
    }

    /// Checks the schema-level constraints and the ranges that keep every
    /// generated problem within the validity region of the closed form.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.tau_list.is_empty() {
            return bad("tau_list is empty".into());
        }
        if let Some(t) = self.tau_list.iter().find(|t| !(0.0..=1.0).contains(*t)) {
            return bad(format!("tau {t} outside [0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.nu) {
            return bad(format!("nu {} outside [0, 1]", self.nu));
        }
        if self.realizations == 0 {
            return bad("realizations must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms selected".into());
        }
        if self.elements == 0 {
            return bad("elements must be at least 1".into());
        }
        if !self.noise_power_dbm.is_finite() || !self.transmit_power_dbm.is_finite() {
            return bad("powers must be finite".into());
        }
        let values = self.sweep_values();
        if values.is_empty() {
            return bad("sweep_values is empty".into());
        }
        for &v in &values {
            let ok = match self.sweep {
                SweepKind::Elements => v >= 1.0 && v.fract() == 0.0 && v <= 1e9,
                SweepKind::Power => v.is_finite(),
                SweepKind::Nu => (0.0..=1.0).contains(&v),
            };
            if !ok {
                return bad(format!("invalid {} sweep value {v}", self.sweep.csv_name()));
            }
        }
        if self.algorithms.contains(&Algorithm::Exhaustive) {
            if let Some(&l) = self.element_counts().iter().max() {
                if l > self.exhaustive_cap.min(63) {
                    return bad(format!(
                        "exhaustive search requested for L = {l}, above the cap of {}",
                        self.exhaustive_cap.min(63)
                    ));
                }
            }
        }
        self.geometry.validate().map_err(as_config_error)?;
        for p in [&self.path_loss.direct, &self.path_loss.tx_irs, &self.path_loss.irs_rx] {
            p.validate().map_err(as_config_error)?;
        }
        self.fading_params(1).map_err(as_config_error)?;
        self.power_model(dbm_to_watts(self.transmit_power_dbm))
            .map_err(as_config_error)?;
        Ok(())
    }

    fn fading_params(&self, n_elements: usize) -> Result<FadingParams> {
        FadingParams::uniform(
            db_to_linear(self.fading.rician_k_u_db),
            db_to_linear(self.fading.rician_k_v_db),
            self.fading.element_spacing_ratio,
            self.fading.beta,
            n_elements,
        )
    }

    fn power_model(&self, transmit_power: f64) -> Result<PowerModel> {
        PowerModel::new(
            transmit_power,
            self.eta,
            self.static_power_mw * 1e-3,
            self.p_on_mw * 1e-3,
            self.p_off_mw * 1e-3,
        )
    }

    /// Parameters of the sweep point where the swept variable equals `value`.
    pub fn scenario(&self, value: f64) -> Result<Scenario> {
        let (n_elements, power_dbm, nu) = match self.sweep {
            SweepKind::Elements => (value as usize, self.transmit_power_dbm, self.nu),
            SweepKind::Power => (self.elements, value, self.nu),
            SweepKind::Nu => (self.elements, self.transmit_power_dbm, value),
        };
        let p = dbm_to_watts(power_dbm);
        Ok(Scenario {
            n_elements,
            nu,
            channel: ChannelModel {
                geometry: self.geometry,
                direct: self.path_loss.direct,
                tx_irs: self.path_loss.tx_irs,
                irs_rx: self.path_loss.irs_rx,
                fading: self.fading_params(n_elements)?,
            },
            power: self.power_model(p)?,
            link: LinkBudget::new(p, dbm_to_watts(self.noise_power_dbm))?,
        })
    }
}
