use std::fmt;

use serde::{Deserialize, Serialize};

use super::operator::{build_dirac_operator, DiffOpPoly};
use crate::gc::{GcAlgebra, GcNumber};
use crate::matrix::{gamma, Axis, GcVector2};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Positive, Branch::Negative];

    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Positive => "positive",
            Branch::Negative => "negative",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Branch::Positive),
            "negative" => Ok(Branch::Negative),
            other => Err(Error::Domain(format!("unknown branch {other:?}"))),
        }
    }
}

/// `E + p` for `E = ±√(p² + m²)`, rearranged as `m² / (E - p)` where the
/// direct sum would cancel.
fn energy_plus_momentum(m: f64, p: f64, branch: Branch) -> f64 {
    let root = p.hypot(m);
    match branch {
        Branch::Positive if p >= 0.0 => root + p,
        Branch::Positive => m * m / (root - p),
        Branch::Negative if p <= 0.0 => -(root - p),
        Branch::Negative => -(m * m) / (root + p),
    }
}

/// `ψ₁/ψ₂ = (E + p)/m` of the plane-wave spinor.
pub fn spinor_ratio(m: f64, p: f64, branch: Branch) -> Result<f64> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::Domain(format!("mass must be positive and finite, got {m}")));
    }
    if !p.is_finite() {
        return Err(Error::Domain(format!("momentum must be finite, got {p}")));
    }
    Ok(energy_plus_momentum(m, p, branch) / m)
}

/// `ψ(x, t) = N ((E + p)/m, 1)ᵀ e^{j(px - Et)}` with `E = ±√(p² + m²)`.
///
/// The phase factor lies in `span{1, j}`, where `j² = -1`, so
/// `e^{jα} = cos α + j sin α`. Only `x` and `t` enter; `∂_y ψ = ∂_z ψ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneWave {
    m: f64,
    p: f64,
    branch: Branch,
    #[serde(rename = "N")]
    n: f64,
    upper: f64,
}

impl PlaneWave {
    /// Normalization defaults to 1.
    pub fn new(m: f64, p: f64, branch: Branch) -> Result<Self> {
        let upper = spinor_ratio(m, p, branch)?;
        Ok(Self {
            m,
            p,
            branch,
            n: 1.0,
            upper,
        })
    }

    pub fn with_normalization(mut self, n: f64) -> Self {
        self.n = n;
        self
    }

    /// Replaces the upper spinor component. The result is no longer a
    /// solution unless `upper` equals [`spinor_ratio`]; used to confirm that
    /// residual checks reject non-solutions.
    pub fn with_upper_component(mut self, upper: f64) -> Self {
        self.upper = upper;
        self
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn momentum(&self) -> f64 {
        self.p
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn normalization(&self) -> f64 {
        self.n
    }

    pub fn energy(&self) -> f64 {
        self.branch.sign() * self.p.hypot(self.m)
    }

    /// `(ψ₁, ψ₂)` amplitudes before the phase factor, including `N`.
    pub fn spinor(&self) -> [f64; 2] {
        [self.n * self.upper, self.n]
    }

    /// `(cos α, sin α)` for `α = px - Et`.
    ///
    /// The phase is carried as an unevaluated sum `hi + lo` from error-free
    /// products, so finite differences of `ψ` are not swamped by rounding in
    /// `α` at large `|x|`, `|t|`.
    pub fn phase(&self, x: f64, t: f64) -> (f64, f64) {
        let e = self.energy();
        let (px, px_err) = two_product(self.p, x);
        let (et, et_err) = two_product(e, t);
        let (hi, sum_err) = two_sum(px, -et);
        let lo = px_err - et_err + sum_err;
        let (s, c) = hi.sin_cos();
        (c - s * lo, s + c * lo)
    }

    pub fn eval(&self, x: f64, t: f64) -> GcVector2 {
        let (c, s) = self.phase(x, t);
        let [u, l] = self.spinor();
        GcVector2::new(GcNumber::new(u * c, 0.0, u * s), GcNumber::new(l * c, 0.0, l * s))
    }

    /// Factor `k_μ` with `∂_μ ψ = k_μ ψ`: `jp` for `x`, `-jE` for `t`, zero for
    /// `y` and `z`.
    pub fn wave_factor(&self, axis: Axis) -> GcNumber {
        match axis {
            Axis::X => GcNumber::J.scale(self.p),
            Axis::T => GcNumber::J.scale(-self.energy()),
            Axis::Y | Axis::Z => GcNumber::ZERO,
        }
    }

    /// `∂^α ψ`, each derivative multiplying from the left by its `k_μ`.
    pub fn derivative(&self, alg: &GcAlgebra, orders: [u8; 4], x: f64, t: f64) -> GcVector2 {
        let mut v = self.eval(x, t);
        for axis in Axis::ALL {
            let k = self.wave_factor(axis);
            for _ in 0..orders[axis.index()] {
                v = v.map(|q| alg.mul(k, q));
            }
        }
        v
    }

    /// `Σ_α C_α ∂^α ψ` at `(x, t)` using exact derivatives.
    pub fn apply_operator(&self, alg: &GcAlgebra, op: &DiffOpPoly, x: f64, t: f64) -> GcVector2 {
        op.terms().fold(GcVector2::ZERO, |acc, (idx, coeff)| {
            acc + alg.mat_apply(coeff, &self.derivative(alg, idx.0, x, t))
        })
    }

    /// `(𝓗 - m)ψ` at `(x, t)`, zero for a solution.
    pub fn apply_dirac_analytic(&self, alg: &GcAlgebra, x: f64, t: f64) -> GcVector2 {
        let h = build_dirac_operator().with_mass(self.m);
        self.apply_operator(alg, &h, x, t)
    }

    /// `𝓗(𝓗ψ)` evaluated pointwise:
    /// `Σ_ν γ^ν ( Σ_μ γ^μ ( k_μ (k_ν ψ) ) )`.
    ///
    /// Each inner sum is the derivative `∂_ν(𝓗ψ)`, built from the values of
    /// `ψ` rather than from the squared symbol.
    pub fn apply_dirac_twice(&self, alg: &GcAlgebra, x: f64, t: f64) -> GcVector2 {
        let psi = self.eval(x, t);
        let mut outer = GcVector2::ZERO;
        for nu in Axis::ALL {
            let d_nu = psi.map(|q| alg.mul(self.wave_factor(nu), q));
            let mut inner = GcVector2::ZERO;
            for mu in Axis::ALL {
                let d_mu_nu = d_nu.map(|q| alg.mul(self.wave_factor(mu), q));
                inner = inner + alg.mat_apply(&gamma(mu), &d_mu_nu);
            }
            outer = outer + alg.mat_apply(&gamma(nu), &inner);
        }
        outer
    }
}

fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}
