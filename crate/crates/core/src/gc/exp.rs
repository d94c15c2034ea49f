//! The exponential `e^{θu}` with `u = cos φ i + sin φ j`.
//!
//! Under the standard product `u·u = cos²φ (ii) + 2 cos φ sin φ (ij) +
//! sin²φ (jj) = -1`, so `span{1, u}` is a copy of the complex numbers and the
//! series collapses to `cos θ + sin θ u`. [`exp_series`] sums the series
//! itself and serves as the independent check of [`exp_closed`].

use serde::{Deserialize, Serialize};

use super::{GcAlgebra, GcNumber};
use crate::{Error, Result};

/// Relative term tolerance of the series.
pub const SERIES_TOL: f64 = 1e-12;
/// Maximum number of series terms.
pub const SERIES_CAP: usize = 200;

/// `cos φ i + sin φ j`
pub fn direction(phi: f64) -> GcNumber {
    let (s, c) = phi.sin_cos();
    GcNumber::new(0.0, c, s)
}

/// `cos θ + sin θ (cos φ i + sin φ j)`
pub fn exp_closed(theta: f64, phi: f64) -> GcNumber {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    GcNumber::new(ct, st * cp, st * sp)
}

fn exp_along_i(alpha: f64) -> GcNumber {
    let (s, c) = alpha.sin_cos();
    GcNumber::new(c, s, 0.0)
}

fn exp_along_j(beta: f64) -> GcNumber {
    let (s, c) = beta.sin_cos();
    GcNumber::new(c, 0.0, s)
}

/// Both sides of `e^{θu(φ)}` versus `e^{θ cos φ i} e^{θ sin φ j}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerWitness {
    pub lhs: GcNumber,
    pub rhs: GcNumber,
    pub discrepancy: f64,
}

impl GcAlgebra {
    /// Partial sums of `Σ (θu)^n / n!` with left-folded powers.
    ///
    /// Each term is formed as `(term_{n-1} · θu) / n`, which equals the
    /// left-folded `(θu)^n / n!` by bilinearity and never overflows. Summation
    /// stops once a term's norm drops below `tol` times the running sum's
    /// norm.
    pub fn exp_series(&self, theta: f64, phi: f64, terms: usize, tol: f64) -> Result<GcNumber> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
        }
        let z = direction(phi).scale(theta);
        let mut term = GcNumber::ONE;
        let mut sum = GcNumber::ONE;
        for n in 1..terms {
            term = self.mul(term, z).scale(1.0 / n as f64);
            sum += term;
            if term.norm() < tol * sum.norm() {
                return Ok(sum);
            }
        }
        Err(Error::NonConvergence { terms })
    }

    /// The left side is [`exp_closed`]; the right side multiplies the two
    /// single-axis exponentials with this algebra's product.
    pub fn euler_inequality_witness(&self, theta: f64, phi: f64) -> EulerWitness {
        let lhs = exp_closed(theta, phi);
        let rhs = self.mul(
            exp_along_i(theta * phi.cos()),
            exp_along_j(theta * phi.sin()),
        );
        EulerWitness {
            lhs,
            rhs,
            discrepancy: (lhs - rhs).norm(),
        }
    }
}

pub fn exp_series(theta: f64, phi: f64, terms: usize, tol: f64) -> Result<GcNumber> {
    GcAlgebra::standard().exp_series(theta, phi, terms, tol)
}

pub fn euler_inequality_witness(theta: f64, phi: f64) -> EulerWitness {
    GcAlgebra::standard().euler_inequality_witness(theta, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn series(theta: f64, phi: f64) -> GcNumber {
        exp_series(theta, phi, SERIES_CAP, SERIES_TOL).unwrap()
    }

    #[test]
    fn series_examples() {
        assert_eq!(series(0.0, 1.3), GcNumber::ONE);
        assert!(series(PI, 0.0).approx_eq(GcNumber::real(-1.0), 1e-11));
        assert!(series(FRAC_PI_2, FRAC_PI_2).approx_eq(GcNumber::J, 1e-11));
    }

    #[test]
    fn closed_examples() {
        let q = exp_closed(FRAC_PI_3, 0.0);
        assert!(q.approx_eq(GcNumber::new(0.5, 3f64.sqrt() / 2.0, 0.0), 1e-15));
        for k in 0..50 {
            let theta = -7.0 + 0.3 * k as f64;
            assert!((exp_closed(theta, 0.1 * k as f64).norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn unit_direction_squares_to_minus_one() {
        for k in 0..64 {
            let u = direction(k as f64 * 0.1);
            assert!((u * u).approx_eq(GcNumber::real(-1.0), 1e-15));
        }
    }

    #[test]
    fn series_matches_closed_within_ten_tol() {
        for k in 0..40 {
            let theta = -4.0 + 0.2 * k as f64;
            let phi = 0.15 * k as f64;
            let s = series(theta, phi);
            assert!(s.approx_eq(exp_closed(theta, phi), 10.0 * SERIES_TOL), "θ={theta}");
        }
    }

    #[test]
    fn series_errors() {
        assert!(matches!(exp_series(1.0, 0.0, 200, 0.0), Err(Error::Domain(_))));
        assert_eq!(
            exp_series(30.0, 0.0, 5, SERIES_TOL),
            Err(Error::NonConvergence { terms: 5 })
        );
        assert!(exp_series(50.0, 0.7, SERIES_CAP, SERIES_TOL).is_ok());
    }

    #[test]
    fn inequality_witness() {
        let w = euler_inequality_witness(1.0, FRAC_PI_4);
        // Hand expansion with A = B = 1/√2:
        // RHS = cos A cos B + sin A cos B i + cos A sin B j
        let a = 1.0 / 2f64.sqrt();
        let rhs = GcNumber::new(a.cos() * a.cos(), a.sin() * a.cos(), a.cos() * a.sin());
        assert!(w.rhs.approx_eq(rhs, 1e-15));
        assert!(w.discrepancy > 0.1, "{}", w.discrepancy);

        assert_eq!(euler_inequality_witness(2.3, 0.0).discrepancy, 0.0);
        assert_eq!(euler_inequality_witness(0.0, 1.1).discrepancy, 0.0);
    }
}
