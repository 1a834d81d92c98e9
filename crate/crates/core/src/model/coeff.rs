use std::f64::consts::TAU;

use num_complex::Complex64;

/// Reduces an angle to `[0, 2π)` using `y - 2π⌊y / 2π⌋`.
pub fn wrap_phase(y: f64) -> f64 {
    let r = y - TAU * (y / TAU).floor();
    // tiny negative inputs round up to exactly 2π
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A complex channel gain stored in rectangular form.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct ComplexCoeff {
    pub re: f64,
    pub im: f64,
}

impl ComplexCoeff {
    pub const ZERO: ComplexCoeff = ComplexCoeff { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        ComplexCoeff { re, im }
    }

    pub fn from_polar(amplitude: f64, phase: f64) -> Self {
        let (s, c) = phase.sin_cos();
        ComplexCoeff {
            re: amplitude * c,
            im: amplitude * s,
        }
    }

    pub fn amplitude(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in `[0, 2π)`.
    pub fn phase(&self) -> f64 {
        wrap_phase(self.im.atan2(self.re))
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl From<Complex64> for ComplexCoeff {
    fn from(c: Complex64) -> Self {
        ComplexCoeff { re: c.re, im: c.im }
    }
}

impl From<ComplexCoeff> for Complex64 {
    fn from(c: ComplexCoeff) -> Self {
        c.to_complex()
    }
}
