//! Finite-dimensional real algebras given by structure constants.
//!
//! A table of `dim³` reals `f[A][B][C]` defines the bilinear product
//! `e_A e_B = Σ_C f[A][B][C] e_C` on the basis `{e_0, …, e_{dim-1}}`. Basis
//! element 0 must be a two-sided unit; tables that violate this are rejected
//! at construction.
//!
//! The law checkers work on the basis. Commutativity and associativity are
//! multilinear conditions, so checking all basis pairs (resp. triples) is
//! equivalent to checking all elements. Zero divisors are only searched among
//! basis pairs; composite divisors such as `(i + j)·x = 0` are out of reach of
//! that scan. Power associativity is not multilinear and is probed on random
//! elements instead.

use std::fmt::Write as _;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Relative tolerance used whenever a comparison cannot be exact.
pub const REL_TOL: f64 = 1e-12;

/// Serialized form of a table: `{"dim": D, "basis": [...], "f": [[[...]]]}`,
/// row-major in `(A, B, C)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableData {
    pub dim: usize,
    pub basis: Vec<String>,
    pub f: Vec<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TableData", into = "TableData")]
pub struct StructureConstantsTable {
    dim: usize,
    basis_names: Vec<String>,
    // flat, index (a * dim + b) * dim + c
    f: Vec<f64>,
}

impl StructureConstantsTable {
    pub fn new(basis_names: Vec<String>, f: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        Self::try_from(TableData {
            dim: basis_names.len(),
            basis: basis_names,
            f,
        })
    }

    /// Builds a table from the basis products, `product(a, b)` returning the
    /// coefficients of `e_a e_b`.
    pub fn from_fn<F>(basis_names: &[&str], mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<f64>,
    {
        let dim = basis_names.len();
        let f = (0..dim)
            .map(|a| (0..dim).map(|b| product(a, b)).collect())
            .collect();
        Self::new(basis_names.iter().map(|s| s.to_string()).collect(), f)
    }

    /// The reals, `dim = 1`.
    pub fn real() -> Self {
        Self::from_fn(&["1"], |_, _| vec![1.0]).expect("real table is valid")
    }

    /// The complex numbers on `{1, i}`.
    pub fn complex() -> Self {
        Self::from_fn(&["1", "i"], |a, b| match (a, b) {
            (0, x) | (x, 0) => unit_vector(2, x),
            _ => vec![-1.0, 0.0],
        })
        .expect("complex table is valid")
    }

    /// Hamilton's quaternions on `{1, i, j, k}`.
    pub fn quaternion() -> Self {
        // (sign, index) of e_a e_b for a, b in {i, j, k}
        const IMAG: [[(f64, usize); 3]; 3] = [
            [(-1.0, 0), (1.0, 3), (-1.0, 2)],
            [(-1.0, 3), (-1.0, 0), (1.0, 1)],
            [(1.0, 2), (-1.0, 1), (-1.0, 0)],
        ];
        Self::from_fn(&["1", "i", "j", "k"], |a, b| match (a, b) {
            (0, x) | (x, 0) => unit_vector(4, x),
            _ => {
                let (sign, idx) = IMAG[a - 1][b - 1];
                let mut v = vec![0.0; 4];
                v[idx] = sign;
                v
            }
        })
        .expect("quaternion table is valid")
    }

    /// The generalized complex numbers on `{1, i, j}`:
    /// `ii = jj = -1`, `ij = ji = 0`.
    pub fn gc() -> Self {
        let f = crate::gc::GC_STRUCTURE
            .iter()
            .map(|row| row.iter().map(|c| c.to_vec()).collect())
            .collect();
        Self::new(vec!["1".into(), "i".into(), "j".into()], f).expect("gc table is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    #[inline]
    pub fn constant(&self, a: usize, b: usize, c: usize) -> f64 {
        self.f[(a * self.dim + b) * self.dim + c]
    }

    /// Coefficients of `e_a e_b`.
    pub fn basis_product(&self, a: usize, b: usize) -> &[f64] {
        let start = (a * self.dim + b) * self.dim;
        &self.f[start..start + self.dim]
    }

    /// True when every structure constant is an integer. Products of basis
    /// elements are then exact in floating point and law checks compare
    /// exactly.
    pub fn is_integral(&self) -> bool {
        self.f.iter().all(|v| v.fract() == 0.0)
    }

    pub fn to_data(&self) -> TableData {
        TableData::from(self.clone())
    }

    /// Bilinear product on raw coefficient slices.
    pub fn mul_coeffs(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let mut out = vec![0.0; d];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0.0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0.0 {
                    continue;
                }
                let w = xa * yb;
                for (c, o) in out.iter_mut().enumerate() {
                    *o += w * self.constant(a, b, c);
                }
            }
        }
        out
    }

    /// Renders coefficients as `3 + 6i - 4j` using the basis names.
    pub fn format_coeffs(&self, coeffs: &[f64]) -> String {
        let mut out = String::new();
        for (idx, &v) in coeffs.iter().enumerate() {
            if v == 0.0 {
                continue;
            }
            let name = &self.basis_names[idx];
            let mag = v.abs();
            let body = if idx == 0 {
                format!("{mag}")
            } else if mag == 1.0 {
                name.clone()
            } else if name.chars().count() == 1 {
                format!("{mag}{name}")
            } else {
                format!("{mag}*{name}")
            };
            if out.is_empty() {
                if v < 0.0 {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                let _ = write!(out, " {} {body}", if v < 0.0 { '-' } else { '+' });
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn unit_vector(dim: usize, idx: usize) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    v[idx] = 1.0;
    v
}

impl TryFrom<TableData> for StructureConstantsTable {
    type Error = Error;

    fn try_from(data: TableData) -> Result<Self> {
        let TableData { dim, basis, f } = data;
        if dim == 0 {
            return Err(Error::InvalidTable("dim must be at least 1".into()));
        }
        if basis.len() != dim {
            return Err(Error::InvalidTable(format!(
                "expected {dim} basis names, got {}",
                basis.len()
            )));
        }
        if f.len() != dim || f.iter().any(|row| row.len() != dim || row.iter().any(|c| c.len() != dim)) {
            return Err(Error::InvalidTable(format!(
                "f must have shape {dim}x{dim}x{dim}"
            )));
        }
        let flat: Vec<f64> = f.into_iter().flatten().flatten().collect();
        if let Some(pos) = flat.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidTable(format!(
                "non-finite constant at flat index {pos}"
            )));
        }
        let table = Self {
            dim,
            basis_names: basis,
            f: flat,
        };
        for a in 0..dim {
            for c in 0..dim {
                let delta = if a == c { 1.0 } else { 0.0 };
                if table.constant(0, a, c) != delta || table.constant(a, 0, c) != delta {
                    return Err(Error::InvalidTable(format!(
                        "basis element 0 is not a two-sided unit (fails on e_{a})"
                    )));
                }
            }
        }
        Ok(table)
    }
}

impl From<StructureConstantsTable> for TableData {
    fn from(t: StructureConstantsTable) -> Self {
        let d = t.dim;
        let f = (0..d)
            .map(|a| (0..d).map(|b| t.basis_product(a, b).to_vec()).collect())
            .collect();
        TableData {
            dim: d,
            basis: t.basis_names,
            f,
        }
    }
}

/// An element `Σ_A r_A e_A` of the algebra defined by `table`.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    coeffs: Vec<f64>,
    table: Arc<StructureConstantsTable>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_table(&self.table, &other.table)
    }
}

fn same_table(a: &Arc<StructureConstantsTable>, b: &Arc<StructureConstantsTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    pub fn new(table: &Arc<StructureConstantsTable>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != table.dim() {
            return Err(Error::Domain(format!(
                "expected {} coefficients, got {}",
                table.dim(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("coefficients must be finite".into()));
        }
        Ok(Self {
            coeffs,
            table: Arc::clone(table),
        })
    }

    pub fn zero(table: &Arc<StructureConstantsTable>) -> Self {
        Self {
            coeffs: vec![0.0; table.dim()],
            table: Arc::clone(table),
        }
    }

    pub fn unit(table: &Arc<StructureConstantsTable>) -> Self {
        Self::basis(table, 0)
    }

    /// # Panics
    /// If `idx >= table.dim()`.
    pub fn basis(table: &Arc<StructureConstantsTable>, idx: usize) -> Self {
        assert!(idx < table.dim(), "basis index {idx} out of range");
        Self {
            coeffs: unit_vector(table.dim(), idx),
            table: Arc::clone(table),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn table(&self) -> &Arc<StructureConstantsTable> {
        &self.table
    }

    /// Euclidean length of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::MismatchedTables)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            coeffs: self.table.mul_coeffs(&self.coeffs, &other.coeffs),
            table: Arc::clone(&self.table),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(f64, f64) -> f64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
            table: Arc::clone(&self.table),
        }
    }

    pub fn scale(&self, r: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| r * c).collect(),
            table: Arc::clone(&self.table),
        }
    }

    /// `x^n` as the left-folded product `((x·x)·x)·…`, with `x^0 = 1`.
    /// The algebra need not be associative, so the parenthesization is part
    /// of the definition.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.table);
        for _ in 0..n {
            acc = Self {
                coeffs: self.table.mul_coeffs(&acc.coeffs, &self.coeffs),
                table: Arc::clone(&self.table),
            };
        }
        acc
    }
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.table.format_coeffs(&self.coeffs))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Commutativity,
    Associativity,
    ZeroDivisor,
    NormMultiplicativity,
    PowerAssociativity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operand {
    Basis(usize),
    Element(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessValue {
    Element(Vec<f64>),
    Real(f64),
}

/// A probe of an algebraic law. `discrepancy > 0` marks a violation; a
/// witness with `discrepancy == 0` records that the law held on the probe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawWitness {
    pub law: Law,
    pub operands: Vec<Operand>,
    pub lhs: WitnessValue,
    pub rhs: WitnessValue,
    pub discrepancy: f64,
}

impl LawWitness {
    /// Basis indices of the operands, when all operands are basis elements.
    pub fn basis_operands(&self) -> Option<Vec<usize>> {
        self.operands
            .iter()
            .map(|op| match op {
                Operand::Basis(i) => Some(*i),
                Operand::Element(_) => None,
            })
            .collect()
    }

    /// Human-readable form, e.g. `(ii)j = -j ≠ 0 = i(ij)`.
    pub fn describe(&self, table: &StructureConstantsTable) -> String {
        let name = |op: &Operand| match op {
            Operand::Basis(i) => table.basis_names()[*i].clone(),
            Operand::Element(c) => format!("({})", table.format_coeffs(c)),
        };
        let value = |v: &WitnessValue| match v {
            WitnessValue::Element(c) => table.format_coeffs(c),
            WitnessValue::Real(r) => format!("{r}"),
        };
        let names: Vec<String> = self.operands.iter().map(name).collect();
        let (l, r) = (value(&self.lhs), value(&self.rhs));
        let rel = if self.discrepancy > 0.0 { "≠" } else { "=" };
        match (self.law, names.as_slice()) {
            (Law::Commutativity, [a, b]) => format!("{a}{b} = {l} {rel} {r} = {b}{a}"),
            (Law::Associativity, [a, b, c]) => {
                format!("({a}{b}){c} = {l} {rel} {r} = {a}({b}{c})")
            }
            (Law::ZeroDivisor, [a, b]) => format!("{a}{b} = {l}"),
            (Law::PowerAssociativity, [x]) => {
                format!("power of x = {x}: {l} {rel} {r}")
            }
            _ => format!("{:?} on {}: {l} {rel} {r}", self.law, names.join(", ")),
        }
    }
}

/// Compares two coefficient vectors: exactly when `exact`, otherwise within
/// [`REL_TOL`] relative to the larger norm. Returns the Euclidean distance
/// when they differ.
fn violation(lhs: &[f64], rhs: &[f64], exact: bool) -> Option<f64> {
    let dist = distance(lhs, rhs);
    let differs = if exact {
        lhs != rhs
    } else {
        let scale = norm(lhs).max(norm(rhs));
        dist > REL_TOL * scale
    };
    differs.then_some(dist)
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// All basis pairs with `e_A e_B ≠ e_B e_A`. Each unordered pair is reported
/// once, with `A < B`.
pub fn check_commutative(table: &StructureConstantsTable) -> Vec<LawWitness> {
    let exact = table.is_integral();
    let mut out = Vec::new();
    for a in 0..table.dim() {
        for b in a + 1..table.dim() {
            let ab = table.basis_product(a, b);
            let ba = table.basis_product(b, a);
            if let Some(d) = violation(ab, ba, exact) {
                out.push(LawWitness {
                    law: Law::Commutativity,
                    operands: vec![Operand::Basis(a), Operand::Basis(b)],
                    lhs: WitnessValue::Element(ab.to_vec()),
                    rhs: WitnessValue::Element(ba.to_vec()),
                    discrepancy: d,
                });
            }
        }
    }
    out
}

/// All basis triples with `(e_A e_B) e_C ≠ e_A (e_B e_C)`. By trilinearity
/// an empty result proves the whole algebra associative.
pub fn check_associative(table: &StructureConstantsTable) -> Vec<LawWitness> {
    let exact = table.is_integral();
    let d = table.dim();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let ab = table.basis_product(a, b);
            for c in 0..d {
                let left = table.mul_coeffs(ab, &unit_vector(d, c));
                let right = table.mul_coeffs(&unit_vector(d, a), table.basis_product(b, c));
                if let Some(dist) = violation(&left, &right, exact) {
                    out.push(LawWitness {
                        law: Law::Associativity,
                        operands: vec![Operand::Basis(a), Operand::Basis(b), Operand::Basis(c)],
                        lhs: WitnessValue::Element(left),
                        rhs: WitnessValue::Element(right),
                        discrepancy: dist,
                    });
                }
            }
        }
    }
    out
}

/// Ordered basis pairs `(e_A, e_B)`, `A, B ≠ 0`, whose product vanishes.
///
/// Only basis pairs are scanned. The discrepancy is `‖e_A‖‖e_B‖ = 1`, the
/// amount by which a multiplicative norm is missed.
pub fn find_zero_divisors(table: &StructureConstantsTable) -> Vec<LawWitness> {
    let exact = table.is_integral();
    let d = table.dim();
    let mut out = Vec::new();
    for a in 1..d {
        for b in 1..d {
            let ab = table.basis_product(a, b);
            let vanishes = if exact {
                ab.iter().all(|&c| c == 0.0)
            } else {
                norm(ab) <= REL_TOL
            };
            if vanishes {
                out.push(LawWitness {
                    law: Law::ZeroDivisor,
                    operands: vec![Operand::Basis(a), Operand::Basis(b)],
                    lhs: WitnessValue::Element(ab.to_vec()),
                    rhs: WitnessValue::Element(vec![0.0; d]),
                    discrepancy: 1.0,
                });
            }
        }
    }
    out
}

/// Compares the parenthesizations of `x³` and `x⁴` on `samples` random
/// elements with coefficients in `[-1, 1]`. Every right-folded or balanced
/// power is compared against the left fold; differences beyond [`REL_TOL`]
/// relative are returned as witnesses.
pub fn check_power_associative_sampled(
    table: &StructureConstantsTable,
    samples: usize,
    seed: u64,
) -> Vec<LawWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = table.dim();
    let mut out = Vec::new();
    for _ in 0..samples {
        let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        out.extend(power_associativity_probe(table, &x));
    }
    out
}

/// Power-associativity probe on a single element.
pub fn power_associativity_probe(table: &StructureConstantsTable, x: &[f64]) -> Vec<LawWitness> {
    let mul = |a: &[f64], b: &[f64]| table.mul_coeffs(a, b);
    let x2 = mul(x, x);
    let left3 = mul(&x2, x);
    let right3 = mul(x, &x2);
    let left4 = mul(&left3, x);
    let right4 = mul(x, &right3);
    let balanced4 = mul(&x2, &x2);

    [(&left3, &right3), (&left4, &right4), (&left4, &balanced4)]
        .into_iter()
        .filter_map(|(l, r)| {
            violation(l, r, false).map(|dist| LawWitness {
                law: Law::PowerAssociativity,
                operands: vec![Operand::Element(x.to_vec())],
                lhs: WitnessValue::Element(l.clone()),
                rhs: WitnessValue::Element(r.clone()),
                discrepancy: dist,
            })
        })
        .collect()
}
