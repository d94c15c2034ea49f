//! The fixed-azimuth sub-algebra: elements `R e^{θ(cos φ i + sin φ j)}` that
//! share one azimuth `φ`.
//!
//! With `φ` fixed the elements span `{1, u}`, `u² = -1`, which is closed under
//! the product, associative, free of zero divisors and carries a
//! multiplicative norm. Products reduce to `R₁R₂ e^{(θ₁+θ₂)u}`.

use serde::{Deserialize, Serialize};

use super::{exp_closed, GcAlgebra, GcNumber};
use crate::{Error, Result};

/// Two elements belong to the same sub-algebra when their azimuths agree to
/// this tolerance.
pub const PHI_TOL: f64 = 1e-12;

/// `θ` is an unbounded phase here, not a colatitude: phases add under
/// [`sgc_mul`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SgcNumber {
    #[serde(rename = "R")]
    r: f64,
    theta: f64,
    phi: f64,
}

impl SgcNumber {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::Domain(format!("R must be a finite nonnegative real, got {r}")));
        }
        if !(theta.is_finite() && phi.is_finite()) {
            return Err(Error::Domain("theta and phi must be finite".into()));
        }
        Ok(Self { r, theta, phi })
    }

    pub fn unit(phi: f64) -> Self {
        Self {
            r: 1.0,
            theta: 0.0,
            phi,
        }
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

    /// Embedding into the full algebra.
    pub fn to_gc(&self) -> GcNumber {
        exp_closed(self.theta, self.phi).scale(self.r)
    }

    /// Norm of the embedded element; equal to `R`.
    pub fn norm(&self) -> f64 {
        self.r
    }

    pub fn same_subalgebra(&self, other: &Self) -> bool {
        (self.phi - other.phi).abs() <= PHI_TOL
    }
}

/// `(R₁, θ₁, φ)·(R₂, θ₂, φ) = (R₁R₂, θ₁+θ₂, φ)`.
pub fn sgc_mul(x: SgcNumber, y: SgcNumber) -> Result<SgcNumber> {
    if !x.same_subalgebra(&y) {
        return Err(Error::Domain(format!(
            "azimuths {} and {} differ; operands are not in one sub-algebra",
            x.phi, y.phi
        )));
    }
    Ok(SgcNumber {
        r: x.r * y.r,
        theta: x.theta + y.theta,
        phi: x.phi,
    })
}

impl GcAlgebra {
    /// Largest componentwise gap between `sgc_mul(x, y)` embedded and the
    /// product of the embeddings.
    pub fn sgc_embedding_gap(&self, x: SgcNumber, y: SgcNumber) -> Result<f64> {
        let via_rule = sgc_mul(x, y)?.to_gc();
        let via_product = self.mul(x.to_gc(), y.to_gc());
        Ok(via_rule.max_abs_diff(via_product))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

    #[test]
    fn product_formula_example() {
        let x = SgcNumber::new(2.0, FRAC_PI_6, FRAC_PI_4).unwrap();
        let y = SgcNumber::new(3.0, FRAC_PI_3, FRAC_PI_4).unwrap();
        let p = sgc_mul(x, y).unwrap();
        assert_eq!(p.r(), 6.0);
        assert!((p.theta() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(p.phi(), FRAC_PI_4);
        // componentwise cross-check: 6 e^{(π/2)u} = 6u
        let expected = GcNumber::new(0.0, 6.0 * FRAC_PI_4.cos(), 6.0 * FRAC_PI_4.sin());
        assert!((x.to_gc() * y.to_gc()).approx_eq(expected, 1e-14));
        assert!(GcAlgebra::standard().sgc_embedding_gap(x, y).unwrap() < 1e-14);
    }

    #[test]
    fn unit_is_neutral() {
        let x = SgcNumber::new(1.7, -4.0, 0.3).unwrap();
        assert_eq!(sgc_mul(SgcNumber::unit(0.3), x).unwrap(), x);
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = SgcNumber::new(1.5, 0.4, 2.0).unwrap();
        let y = SgcNumber::new(0.25, -1.1, 2.0).unwrap();
        assert_eq!(sgc_mul(x, y).unwrap().norm(), x.norm() * y.norm());
        let embedded = (x.to_gc() * y.to_gc()).norm();
        assert!((embedded - x.norm() * y.norm()).abs() < 1e-15);
    }

    #[test]
    fn mismatched_azimuth_is_rejected() {
        let x = SgcNumber::new(1.0, 0.0, 0.5).unwrap();
        let y = SgcNumber::new(1.0, 0.0, 0.5 + 1e-9).unwrap();
        assert!(matches!(sgc_mul(x, y), Err(Error::Domain(_))));
        let z = SgcNumber::new(1.0, 0.0, 0.5 + 1e-13).unwrap();
        assert!(sgc_mul(x, z).is_ok());
    }

    #[test]
    fn validation() {
        assert!(SgcNumber::new(-1.0, 0.0, 0.0).is_err());
        assert!(SgcNumber::new(1.0, f64::INFINITY, 0.0).is_err());
        assert!(SgcNumber::new(0.0, 100.0, -3.0).is_ok());
    }
}
