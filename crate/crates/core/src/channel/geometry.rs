use crate::error::{Error, Result};

type Point = [f64; 3];

fn difference(to: &Point, from: &Point) -> Point {
    [to[0] - from[0], to[1] - from[1], to[2] - from[2]]
}

fn norm(v: &Point) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Positions of the transmitter, receiver and IRS, in meters.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Geometry {
    pub tx: Point,
    pub rx: Point,
    pub irs: Point,
}

impl Geometry {
    pub fn new(tx: Point, rx: Point, irs: Point) -> Result<Self> {
        let g = Geometry { tx, rx, irs };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.tx, self.rx, self.irs];
        if all.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::domain("coordinates must be finite"));
        }
        if self.tx == self.rx || self.tx == self.irs || self.rx == self.irs {
            return Err(Error::domain("transmitter, receiver and IRS must be at distinct positions"));
        }
        Ok(())
    }

    /// Tx–Rx distance `d₀`.
    pub fn direct_distance(&self) -> f64 {
        norm(&difference(&self.rx, &self.tx))
    }

    /// Tx–IRS distance `d_u`.
    pub fn tx_irs_distance(&self) -> f64 {
        norm(&difference(&self.irs, &self.tx))
    }

    /// IRS–Rx distance `d_v`.
    pub fn irs_rx_distance(&self) -> f64 {
        norm(&difference(&self.rx, &self.irs))
    }
}

impl Default for Geometry {
    fn default() -> Self {
        Geometry {
            tx: [0.0, 0.0, 0.0],
            rx: [100.0, 0.0, 0.0],
            irs: [50.0, 20.0, 10.0],
        }
    }
}

/// Which end of the IRS a steering vector describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkSide {
    /// Tx→IRS.
    Arrival,
    /// IRS→Rx.
    Departure,
}

/// Inclination in `[0, π]` and azimuth in `(−π, π]`, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteeringAngles {
    pub inclination_aoa: f64,
    pub azimuth_aoa: f64,
    pub inclination_aod: f64,
    pub azimuth_aod: f64,
}

impl SteeringAngles {
    /// `sin(ϑ) cos(φ)`, the direction cosine along the array axis.
    pub fn array_cosine(&self, side: LinkSide) -> f64 {
        let (inc, az) = match side {
            LinkSide::Arrival => (self.inclination_aoa, self.azimuth_aoa),
            LinkSide::Departure => (self.inclination_aod, self.azimuth_aod),
        };
        inc.sin() * az.cos()
    }
}

fn spherical(v: &Point) -> (f64, f64) {
    let r = norm(v);
    let inclination = (v[2] / r).clamp(-1.0, 1.0).acos();
    let mut azimuth = v[1].atan2(v[0]);
    if azimuth <= -std::f64::consts::PI {
        azimuth = std::f64::consts::PI;
    }
    (inclination, azimuth)
}

/// Angles of the IRS→Tx (arrival) and IRS→Rx (departure) directions in a
/// frame centred on the IRS whose x-axis is the array axis.
pub fn steering_angles(geom: &Geometry) -> Result<SteeringAngles> {
    if geom.irs == geom.tx || geom.irs == geom.rx {
        return Err(Error::domain("IRS is colocated with a terminal"));
    }
    let (inclination_aoa, azimuth_aoa) = spherical(&difference(&geom.tx, &geom.irs));
    let (inclination_aod, azimuth_aod) = spherical(&difference(&geom.rx, &geom.irs));
    Ok(SteeringAngles {
        inclination_aoa,
        azimuth_aoa,
        inclination_aod,
        azimuth_aod,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_geometry_angles() {
        // independently computed with a vector-algebra script
        let a = steering_angles(&Geometry::default()).unwrap();
        assert!((a.inclination_aoa - 1.7544003370738153).abs() < 1e-12);
        assert!((a.azimuth_aoa - -2.761086276477428).abs() < 1e-12);
        assert!((a.inclination_aod - 1.7544003370738153).abs() < 1e-12);
        assert!((a.azimuth_aod - -0.3805063771123649).abs() < 1e-12);
        assert!((a.array_cosine(LinkSide::Arrival) - -0.9128709291752768).abs() < 1e-12);
        assert!((a.array_cosine(LinkSide::Departure) - 0.9128709291752768).abs() < 1e-12);
    }

    #[test]
    fn default_geometry_distances() {
        let g = Geometry::default();
        assert_eq!(g.direct_distance(), 100.0);
        assert!((g.tx_irs_distance() - 54.772255750516614).abs() < 1e-12);
        assert!((g.irs_rx_distance() - 54.772255750516614).abs() < 1e-12);
    }

    #[test]
    fn endfire_and_broadside() {
        let g = Geometry::new([-5.0, 0.0, 0.0], [0.0, 0.0, 30.0], [0.0, 0.0, 0.0]).unwrap();
        let a = steering_angles(&g).unwrap();
        assert!((a.array_cosine(LinkSide::Arrival).abs() - 1.0).abs() < 1e-15);
        assert!(a.array_cosine(LinkSide::Departure).abs() < 1e-15);
        assert!(a.azimuth_aoa > 0.0, "azimuth lies in (-π, π]");
    }

    #[test]
    fn colocation_is_rejected() {
        assert!(Geometry::new([0.0; 3], [1.0, 0.0, 0.0], [0.0; 3]).is_err());
        let g = Geometry {
            tx: [0.0; 3],
            rx: [1.0, 0.0, 0.0],
            irs: [1.0, 0.0, 0.0],
        };
        assert!(steering_angles(&g).is_err());
    }
}
