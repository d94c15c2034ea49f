//! Pointwise residuals `‖(𝓗 - m)ψ‖` of a plane wave, computed once with exact
//! derivatives and once with central differences at steps `h` and `h/2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::plane_wave::PlaneWave;
use crate::gc::GcAlgebra;
use crate::matrix::{gamma, Axis, GcVector2};
use crate::{Error, Result};

/// Central-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Half-width of the sampling square for `(x, t)`.
pub const SAMPLE_EXTENT: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub h: f64,
    /// Sample points `(x, t)`.
    pub points: Vec<(f64, f64)>,
    pub analytic: Vec<f64>,
    pub finite_difference: Vec<f64>,
    /// Same as `finite_difference` with step `h/2`.
    pub finite_difference_half: Vec<f64>,
    pub max_analytic: f64,
    pub max_finite_difference: f64,
    pub max_finite_difference_half: f64,
}

impl ResidualReport {
    /// `max_fd(h) / max_fd(h/2)`; close to 4 for a second-order stencil.
    pub fn order_ratio(&self) -> f64 {
        self.max_finite_difference / self.max_finite_difference_half
    }

    /// `C` in `residual ≈ C h²`, estimated from the `h/2` run.
    pub fn error_constant(&self) -> f64 {
        let half = self.h / 2.0;
        self.max_finite_difference_half / (half * half)
    }
}

/// `count` points uniform in `[-10, 10]²`.
pub fn sample_points(count: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                rng.gen_range(-SAMPLE_EXTENT..=SAMPLE_EXTENT),
                rng.gen_range(-SAMPLE_EXTENT..=SAMPLE_EXTENT),
            )
        })
        .collect()
}

/// Central difference of `f` at `s` using the representable stencil points
/// `s ± h`, divided by their actual distance.
fn central(s: f64, h: f64, f: impl Fn(f64) -> GcVector2) -> GcVector2 {
    let (plus, minus) = (s + h, s - h);
    (f(plus) - f(minus)).scale(1.0 / (plus - minus))
}

impl PlaneWave {
    /// `(𝓗 - m)ψ` with `∂_x`, `∂_t` replaced by central differences of
    /// [`PlaneWave::eval`].
    pub fn apply_dirac_finite_difference(&self, alg: &GcAlgebra, x: f64, t: f64, h: f64) -> GcVector2 {
        let dx = central(x, h, |s| self.eval(s, t));
        let dt = central(t, h, |s| self.eval(x, s));
        let psi = self.eval(x, t);
        alg.mat_apply(&gamma(Axis::X), &dx) + alg.mat_apply(&gamma(Axis::T), &dt) - psi.scale(self.mass())
    }
}

/// Residuals of `w` at `points` random points. Errors if `h` is not a
/// positive finite step.
pub fn residual_check(
    alg: &GcAlgebra,
    w: &PlaneWave,
    points: usize,
    seed: u64,
    h: f64,
) -> Result<ResidualReport> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step must be positive and finite, got {h}")));
    }
    let pts = sample_points(points, seed);
    let analytic: Vec<f64> = pts
        .iter()
        .map(|&(x, t)| w.apply_dirac_analytic(alg, x, t).norm())
        .collect();
    let fd = |step: f64| -> Vec<f64> {
        pts.iter()
            .map(|&(x, t)| w.apply_dirac_finite_difference(alg, x, t, step).norm())
            .collect()
    };
    let finite_difference = fd(h);
    let finite_difference_half = fd(h / 2.0);
    let max = |v: &[f64]| v.iter().copied().fold(0.0, f64::max);
    Ok(ResidualReport {
        h,
        max_analytic: max(&analytic),
        max_finite_difference: max(&finite_difference),
        max_finite_difference_half: max(&finite_difference_half),
        points: pts,
        analytic,
        finite_difference,
        finite_difference_half,
    })
}
