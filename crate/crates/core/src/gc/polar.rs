use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::GcNumber;
use crate::{Error, Result};

/// Spherical chart `a = R cos θ`, `b = R sin θ cos φ`, `c = R sin θ sin φ`
/// with `R ≥ 0`, `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
///
/// On the real axis (`b = c = 0`) the azimuth is undefined; the chart picks
/// `φ = 0`, and `θ = 0` for `a ≥ 0`, `θ = π` for `a < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolar")]
pub struct PolarGc {
    #[serde(rename = "R")]
    r: f64,
    theta: f64,
    phi: f64,
}

#[derive(Deserialize)]
struct RawPolar {
    #[serde(rename = "R")]
    r: f64,
    theta: f64,
    phi: f64,
}

impl TryFrom<RawPolar> for PolarGc {
    type Error = Error;
    fn try_from(raw: RawPolar) -> Result<Self> {
        PolarGc::new(raw.r, raw.theta, raw.phi)
    }
}

impl PolarGc {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::Domain(format!("R must be a finite nonnegative real, got {r}")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Domain(format!("theta must lie in [0, pi], got {theta}")));
        }
        if !(0.0..TAU).contains(&phi) {
            return Err(Error::Domain(format!("phi must lie in [0, 2pi), got {phi}")));
        }
        Ok(Self { r, theta, phi })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn from_gc(q: GcNumber) -> Self {
        let rho = q.b.hypot(q.c);
        let r = q.norm();
        if rho == 0.0 {
            let theta = if q.a >= 0.0 { 0.0 } else { PI };
            return Self { r, theta, phi: 0.0 };
        }
        let theta = rho.atan2(q.a);
        let mut phi = q.c.atan2(q.b);
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
        Self { r, theta, phi }
    }

    pub fn to_gc(&self) -> GcNumber {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        GcNumber::new(self.r * ct, self.r * st * cp, self.r * st * sp)
    }
}
