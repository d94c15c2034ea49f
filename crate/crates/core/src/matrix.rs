//! 2×2 matrices over the generalized complex numbers.
//!
//! Every entry of a matrix product is a sum of single binary products, so
//! [`GcAlgebra::mat_mul`] is unambiguous. Triple products are not: the
//! entries of `A(BC)` and `(AB)C` differ in general, and so do `A(Bv)` and
//! `(AB)v`. Only binary operations are exposed; callers parenthesize by
//! nesting calls.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::gc::{GcAlgebra, GcNumber};

/// Entrywise tolerance for approximate matrix equality.
pub const MATRIX_TOL: f64 = 1e-12;

/// Spacetime axis. The numbering matches the gamma matrix index, `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    T,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::T, Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::T => "t",
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[GcNumber; 4]", into = "[GcNumber; 4]")]
pub struct GcMatrix(pub [[GcNumber; 2]; 2]);

impl From<[GcNumber; 4]> for GcMatrix {
    fn from(e: [GcNumber; 4]) -> Self {
        Self([[e[0], e[1]], [e[2], e[3]]])
    }
}

impl From<GcMatrix> for [GcNumber; 4] {
    fn from(m: GcMatrix) -> Self {
        let [[a, b], [c, d]] = m.0;
        [a, b, c, d]
    }
}

impl GcMatrix {
    pub const ZERO: Self = Self([[GcNumber::ZERO; 2]; 2]);
    pub const IDENTITY: Self = Self([[GcNumber::ONE, GcNumber::ZERO], [GcNumber::ZERO, GcNumber::ONE]]);

    pub const fn new(rows: [[GcNumber; 2]; 2]) -> Self {
        Self(rows)
    }

    pub fn scalar(q: GcNumber) -> Self {
        Self([[q, GcNumber::ZERO], [GcNumber::ZERO, q]])
    }

    pub fn entry(&self, row: usize, col: usize) -> GcNumber {
        self.0[row][col]
    }

    pub fn map(&self, f: impl Fn(GcNumber) -> GcNumber) -> Self {
        Self(self.0.map(|row| row.map(&f)))
    }

    fn zip(&self, other: &Self, f: impl Fn(GcNumber, GcNumber) -> GcNumber) -> Self {
        let mut out = Self::ZERO;
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = f(self.0[r][c], other.0[r][c]);
            }
        }
        out
    }

    pub fn scale(&self, r: f64) -> Self {
        self.map(|q| q.scale(r))
    }

    /// True when every component of every entry is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|q| q.to_array().iter().all(|&v| v == 0.0))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| a.max_abs_diff(*b))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|q| q.is_finite())
    }
}

impl Add for GcMatrix {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for GcMatrix {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for GcMatrix {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|q| -q)
    }
}

impl Mul for GcMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GcAlgebra::standard().mat_mul(&self, &rhs)
    }
}

impl Mul<GcVector2> for GcMatrix {
    type Output = GcVector2;
    fn mul(self, rhs: GcVector2) -> GcVector2 {
        GcAlgebra::standard().mat_apply(&self, &rhs)
    }
}

impl fmt::Display for GcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// A two-component column `(ψ₁, ψ₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GcVector2(pub [GcNumber; 2]);

impl GcVector2 {
    pub const ZERO: Self = Self([GcNumber::ZERO; 2]);

    pub const fn new(upper: GcNumber, lower: GcNumber) -> Self {
        Self([upper, lower])
    }

    pub fn upper(&self) -> GcNumber {
        self.0[0]
    }

    pub fn lower(&self) -> GcNumber {
        self.0[1]
    }

    /// `(Σ N(ψ_k)²)^½`
    pub fn norm(&self) -> f64 {
        (self.0[0].norm_sqr() + self.0[1].norm_sqr()).sqrt()
    }

    pub fn scale(&self, r: f64) -> Self {
        Self(self.0.map(|q| q.scale(r)))
    }

    pub fn map(&self, f: impl Fn(GcNumber) -> GcNumber) -> Self {
        Self(self.0.map(f))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0[0]
            .max_abs_diff(other.0[0])
            .max(self.0[1].max_abs_diff(other.0[1]))
    }
}

impl Add for GcVector2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

impl Sub for GcVector2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1]])
    }
}

impl Neg for GcVector2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|q| -q)
    }
}

const O: GcNumber = GcNumber::ZERO;
const ONE: GcNumber = GcNumber::ONE;
const I: GcNumber = GcNumber::I;
const J: GcNumber = GcNumber::J;
const NEG_ONE: GcNumber = GcNumber::new(-1.0, 0.0, 0.0);
const NEG_I: GcNumber = GcNumber::new(0.0, -1.0, 0.0);
const NEG_J: GcNumber = GcNumber::new(0.0, 0.0, -1.0);

/// `γ⁰ … γ³` in axis order `(t, x, y, z)`:
///
/// ```text
/// γ⁰ = [[0, j], [j, 0]]    γ¹ = [[0, -j], [j, 0]]
/// γ² = [[0, -i], [i, 0]]   γ³ = [[1, 0], [0, -1]]
/// ```
pub const GAMMA: [GcMatrix; 4] = [
    GcMatrix::new([[O, J], [J, O]]),
    GcMatrix::new([[O, NEG_J], [J, O]]),
    GcMatrix::new([[O, NEG_I], [I, O]]),
    GcMatrix::new([[ONE, O], [O, NEG_ONE]]),
];

pub fn gamma(axis: Axis) -> GcMatrix {
    GAMMA[axis.index()]
}

/// Expected value of `γ^μ γ^ν + γ^ν γ^μ`: `-2I` for `t`, `2I` for a spatial
/// axis on the diagonal, zero off it.
pub fn metric_anticommutator(mu: Axis, nu: Axis) -> GcMatrix {
    match (mu == nu, mu) {
        (false, _) => GcMatrix::ZERO,
        (true, Axis::T) => GcMatrix::IDENTITY.scale(-2.0),
        (true, _) => GcMatrix::IDENTITY.scale(2.0),
    }
}

/// One of the ten conditions on the gamma matrices: four squares and six
/// anticommutators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaIdentity {
    pub label: String,
    pub computed: GcMatrix,
    pub expected: GcMatrix,
}

impl GammaIdentity {
    /// Exact entrywise equality.
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

impl GcAlgebra {
    pub fn mat_mul(&self, a: &GcMatrix, b: &GcMatrix) -> GcMatrix {
        let mut out = GcMatrix::ZERO;
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = self.mul(a.0[r][0], b.0[0][c]) + self.mul(a.0[r][1], b.0[1][c]);
            }
        }
        out
    }

    /// `AB + BA`
    pub fn anticommutator(&self, a: &GcMatrix, b: &GcMatrix) -> GcMatrix {
        self.mat_mul(a, b) + self.mat_mul(b, a)
    }

    pub fn mat_apply(&self, a: &GcMatrix, v: &GcVector2) -> GcVector2 {
        let row = |r: usize| self.mul(a.0[r][0], v.0[0]) + self.mul(a.0[r][1], v.0[1]);
        GcVector2::new(row(0), row(1))
    }

    /// `A(Bv) - (AB)v` and its norm. Zero exactly when composing the matrices
    /// first agrees with applying them one after the other to `v`.
    pub fn operator_associator_probe(
        &self,
        a: &GcMatrix,
        b: &GcMatrix,
        v: &GcVector2,
    ) -> (GcVector2, f64) {
        let sequential = self.mat_apply(a, &self.mat_apply(b, v));
        let composed = self.mat_apply(&self.mat_mul(a, b), v);
        let diff = sequential - composed;
        (diff, diff.norm())
    }

    /// `(γ^μ)²` for each axis, then `{γ^μ, γ^ν}` for each pair `μ < ν`.
    pub fn gamma_identities(&self) -> Vec<GammaIdentity> {
        let mut out = Vec::with_capacity(10);
        for mu in Axis::ALL {
            let g = gamma(mu);
            out.push(GammaIdentity {
                label: format!("gamma_{0}^2 = {1}I", mu.name(), if mu == Axis::T { "-" } else { "" }),
                computed: self.mat_mul(&g, &g),
                expected: metric_anticommutator(mu, mu).scale(0.5),
            });
        }
        for (k, &mu) in Axis::ALL.iter().enumerate() {
            for &nu in &Axis::ALL[k + 1..] {
                out.push(GammaIdentity {
                    label: format!("{{gamma_{}, gamma_{}}} = 0", mu.name(), nu.name()),
                    computed: self.anticommutator(&gamma(mu), &gamma(nu)),
                    expected: GcMatrix::ZERO,
                });
            }
        }
        out
    }
}
