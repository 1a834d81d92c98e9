use crate::error::{Error, Result};

/// Distance-dependent path loss `c_ref (d / d_ref)^(−a)` (linear).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathLossParams {
    pub c_ref: f64,
    /// Reference distance, meters.
    pub d_ref: f64,
    pub exponent: f64,
}

impl PathLossParams {
    pub fn new(c_ref: f64, d_ref: f64, exponent: f64) -> Result<Self> {
        let p = PathLossParams { c_ref, d_ref, exponent };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("c_ref", self.c_ref), ("d_ref", self.d_ref), ("exponent", self.exponent)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(format!("path-loss {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    /// Default Tx–Rx parameters: `c_ref = 1e-5`, `d_ref = 1 m`, `a = 3.7`.
    pub fn direct_default() -> Self {
        PathLossParams { c_ref: 1e-5, d_ref: 1.0, exponent: 3.7 }
    }

    /// Default Tx–IRS and IRS–Rx parameters: `c_ref = 1e-3`, `d_ref = 1 m`, `a = 2.2`.
    pub fn irs_default() -> Self {
        PathLossParams { c_ref: 1e-3, d_ref: 1.0, exponent: 2.2 }
    }
}

pub fn path_loss(params: &PathLossParams, distance: f64) -> Result<f64> {
    if !(distance > 0.0) || !distance.is_finite() {
        return Err(Error::domain(format!("distance must be positive, got {distance}")));
    }
    Ok(params.c_ref * (distance / params.d_ref).powf(-params.exponent))
}
