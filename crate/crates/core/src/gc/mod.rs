//! Generalized complex numbers `q = a + bi + cj`.
//!
//! Multiplication follows `ii = jj = -1`, `ij = ji = 0`:
//!
//! ```text
//! q1 q2 = (a1a2 - b1b2 - c1c2) + (a1b2 + b1a2) i + (a1c2 + c1a2) j
//! ```
//!
//! The product is commutative but not associative, `(ii)j = -j` while
//! `i(ij) = 0`, and `i`, `j` are zero divisors. Every element lies in a plane
//! `span{1, u}` with `u² = -1`, and each such plane is a copy of the complex
//! numbers; that is what makes powers, the exponential and the fixed-azimuth
//! sub-algebra in [`sgc`] well behaved.
//!
//! All products go through a [`GcAlgebra`], which holds the structure
//! constants. The operator impls on [`GcNumber`] use [`GcAlgebra::standard`];
//! the explicit methods exist so that a modified table can be substituted and
//! every downstream check re-run against it.

mod adler;
mod exp;
mod polar;
pub mod sgc;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstantsTable;
use crate::{Error, Result};

pub use adler::{adler_check, AdlerReport, AdlerWitness, PostulateResult, Verdict};
pub use exp::{
    direction, euler_inequality_witness, exp_closed, exp_series, EulerWitness, SERIES_CAP,
    SERIES_TOL,
};
pub use polar::PolarGc;
pub use sgc::{sgc_mul, SgcNumber};

/// `f[A][B][C]` on the basis `{1, i, j}`.
pub const GC_STRUCTURE: [[[f64; 3]; 3]; 3] = [
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    [[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
    [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct GcNumber {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GcNumber {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    pub const fn real(a: f64) -> Self {
        Self::new(a, 0.0, 0.0)
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite()
    }

    /// `a - bi - cj`
    pub fn conj(self) -> Self {
        Self::new(self.a, -self.b, -self.c)
    }

    pub fn norm_sqr(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c
    }

    /// `(a² + b² + c²)^½`, which is also `(q̄q)^½`.
    pub fn norm(self) -> f64 {
        self.a.hypot(self.b).hypot(self.c)
    }

    pub fn scale(self, r: f64) -> Self {
        Self::new(r * self.a, r * self.b, r * self.c)
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn to_polar(self) -> PolarGc {
        PolarGc::from_gc(self)
    }

    pub fn from_polar(p: PolarGc) -> Self {
        p.to_gc()
    }
}

impl Add for GcNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

impl AddAssign for GcNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for GcNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c)
    }
}

impl Neg for GcNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c)
    }
}

impl Mul for GcNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GcAlgebra::standard().mul(self, rhs)
    }
}

impl Mul<f64> for GcNumber {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<GcNumber> for f64 {
    type Output = GcNumber;
    fn mul(self, rhs: GcNumber) -> GcNumber {
        rhs.scale(self)
    }
}

impl fmt::Display for GcNumber {
    /// `a ± bi ± cj`, all three components always shown.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |v: f64| if v.is_sign_negative() && v != 0.0 { '-' } else { '+' };
        write!(
            f,
            "{} {} {}i {} {}j",
            self.a,
            sign(self.b),
            self.b.abs(),
            sign(self.c),
            self.c.abs()
        )
    }
}

impl FromStr for GcNumber {
    type Err = Error;

    /// Parses the comma-separated triple `a,b,c`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(Error::Domain(format!(
                "expected three comma-separated components, got {s:?}"
            )));
        };
        let parse = |t: &str| -> Result<f64> {
            let v: f64 = t
                .parse()
                .map_err(|_| Error::Domain(format!("not a number: {t:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Domain(format!("component must be finite: {t:?}")))
            }
        };
        Ok(Self::new(parse(a)?, parse(b)?, parse(c)?))
    }
}

/// Structure constants of a three-dimensional unital algebra on `{1, i, j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GcAlgebra {
    f: [[[f64; 3]; 3]; 3],
}

static STANDARD: GcAlgebra = GcAlgebra { f: GC_STRUCTURE };

impl GcAlgebra {
    /// The algebra with `ii = jj = -1`, `ij = ji = 0`.
    pub fn standard() -> &'static GcAlgebra {
        &STANDARD
    }

    /// Accepts any validated three-dimensional table. Used to re-run the
    /// verification suite against perturbed constants.
    pub fn from_table(table: &StructureConstantsTable) -> Result<Self> {
        if table.dim() != 3 {
            return Err(Error::InvalidTable(format!(
                "a generalized complex table has dim 3, got {}",
                table.dim()
            )));
        }
        let mut f = [[[0.0; 3]; 3]; 3];
        for (a, plane) in f.iter_mut().enumerate() {
            for (b, row) in plane.iter_mut().enumerate() {
                row.copy_from_slice(table.basis_product(a, b));
            }
        }
        Ok(Self { f })
    }

    pub fn to_table(&self) -> StructureConstantsTable {
        StructureConstantsTable::from_fn(&["1", "i", "j"], |a, b| self.f[a][b].to_vec())
            .expect("GcAlgebra holds a validated table")
    }

    pub fn is_standard(&self) -> bool {
        self.f == GC_STRUCTURE
    }

    pub fn mul(&self, x: GcNumber, y: GcNumber) -> GcNumber {
        let (xs, ys) = (x.to_array(), y.to_array());
        let mut out = [0.0; 3];
        for (a, &xa) in xs.iter().enumerate() {
            for (b, &yb) in ys.iter().enumerate() {
                let w = xa * yb;
                for (o, &f) in out.iter_mut().zip(&self.f[a][b]) {
                    *o += w * f;
                }
            }
        }
        GcNumber::from_array(out)
    }

    /// Left-folded power `((x·x)·x)·…`, `x^0 = 1`.
    pub fn power(&self, x: GcNumber, n: u32) -> GcNumber {
        (0..n).fold(GcNumber::ONE, |acc, _| self.mul(acc, x))
    }
}
