use crate::error::{Error, Result};

/// Converts dBm to Watts: `10^((dBm − 30) / 10)`.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

/// Transmitter, receiver and per-element power consumption, in Watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerModel {
    transmit_power: f64,
    amplifier_efficiency: f64,
    static_power: f64,
    p_on: f64,
    p_off: f64,
}

impl PowerModel {
    pub fn new(
        transmit_power: f64,
        amplifier_efficiency: f64,
        static_power: f64,
        p_on: f64,
        p_off: f64,
    ) -> Result<Self> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must be positive and finite, got {v}")))
            }
        };
        positive("transmit power", transmit_power)?;
        positive("static power", static_power)?;
        positive("on-state element power", p_on)?;
        positive("off-state element power", p_off)?;
        if !(amplifier_efficiency > 0.0 && amplifier_efficiency <= 1.0) {
            return Err(Error::domain(format!(
                "amplifier efficiency must lie in (0, 1], got {amplifier_efficiency}"
            )));
        }
        if p_off > p_on {
            return Err(Error::domain(format!(
                "off-state power {p_off} W exceeds on-state power {p_on} W"
            )));
        }
        Ok(PowerModel {
            transmit_power,
            amplifier_efficiency,
            static_power,
            p_on,
            p_off,
        })
    }

    pub fn transmit_power(&self) -> f64 {
        self.transmit_power
    }

    pub fn amplifier_efficiency(&self) -> f64 {
        self.amplifier_efficiency
    }

    pub fn static_power(&self) -> f64 {
        self.static_power
    }

    pub fn p_on(&self) -> f64 {
        self.p_on
    }

    pub fn p_off(&self) -> f64 {
        self.p_off
    }

    /// `P_fix = p / η + P_static`.
    pub fn fixed_power(&self) -> f64 {
        self.transmit_power / self.amplifier_efficiency + self.static_power
    }

    /// Total consumption with `n_on` of `n_elements` elements switched on.
    pub fn total_power(&self, n_on: usize, n_elements: usize) -> Result<f64> {
        if n_on > n_elements {
            return Err(Error::domain(format!(
                "{n_on} active elements out of {n_elements}"
            )));
        }
        Ok(self.total_power_unchecked(n_on, n_elements))
    }

    pub(crate) fn total_power_unchecked(&self, n_on: usize, n_elements: usize) -> f64 {
        self.fixed_power()
            + n_elements as f64 * self.p_off
            + (self.p_on - self.p_off) * n_on as f64
    }

    /// Same model with a different transmit power.
    pub fn with_transmit_power(&self, transmit_power: f64) -> Result<Self> {
        PowerModel::new(
            transmit_power,
            self.amplifier_efficiency,
            self.static_power,
            self.p_on,
            self.p_off,
        )
    }
}

/// Transmit and noise power, in Watts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    transmit_power: f64,
    noise_power: f64,
}

impl LinkBudget {
    pub fn new(transmit_power: f64, noise_power: f64) -> Result<Self> {
        if !(transmit_power > 0.0 && transmit_power.is_finite()) {
            return Err(Error::domain(format!("transmit power must be positive, got {transmit_power}")));
        }
        if !(noise_power > 0.0 && noise_power.is_finite()) {
            return Err(Error::domain(format!("noise power must be positive, got {noise_power}")));
        }
        Ok(LinkBudget {
            transmit_power,
            noise_power,
        })
    }

    pub fn transmit_power(&self) -> f64 {
        self.transmit_power
    }

    pub fn noise_power(&self) -> f64 {
        self.noise_power
    }

    /// `γ̄ = p / σ_w²`.
    pub fn gamma_bar(&self) -> f64 {
        self.transmit_power / self.noise_power
    }
}
