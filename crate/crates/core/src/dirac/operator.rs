use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::StructureConstantsTable;
use crate::gc::{GcAlgebra, GcNumber};
use crate::matrix::{gamma, Axis, GcMatrix};
use crate::{Error, Result};

/// Highest derivative order stored per axis.
pub const MAX_ORDER: u8 = 2;

/// Orders of `∂_t, ∂_x, ∂_y, ∂_z` in a monomial. The derivative symbols
/// commute, so a monomial is determined by these four counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(pub [u8; 4]);

impl MultiIndex {
    pub const CONSTANT: Self = Self([0; 4]);

    pub fn first(axis: Axis) -> Self {
        let mut o = [0; 4];
        o[axis.index()] = 1;
        Self(o)
    }

    pub fn pair(mu: Axis, nu: Axis) -> Self {
        let mut o = [0; 4];
        o[mu.index()] += 1;
        o[nu.index()] += 1;
        Self(o)
    }

    pub fn order(&self, axis: Axis) -> u8 {
        self.0[axis.index()]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&o| o as u32).sum()
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let mut o = [0; 4];
        for (k, slot) in o.iter_mut().enumerate() {
            *slot = self.0[k] + other.0[k];
            if *slot > MAX_ORDER {
                return None;
            }
        }
        Some(Self(o))
    }

    // x, y, z, t reading order, lower total order first
    fn display_key(&self) -> (u32, Reverse<[u8; 4]>) {
        let [t, x, y, z] = self.0;
        (self.total(), Reverse([x, y, z, t]))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.total() == 0 {
            return f.write_str("1");
        }
        for axis in [Axis::X, Axis::Y, Axis::Z, Axis::T] {
            match self.order(axis) {
                0 => {}
                1 => write!(f, "∂_{}", axis.name())?,
                n => write!(f, "∂_{}^{n}", axis.name())?,
            }
        }
        Ok(())
    }
}

/// A polynomial in the commuting symbols `∂_t, ∂_x, ∂_y, ∂_z` with constant
/// 2×2 matrix coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiffOpPoly {
    terms: BTreeMap<MultiIndex, GcMatrix>,
}

impl DiffOpPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(coefficient: GcMatrix) -> Self {
        Self::monomial(MultiIndex::CONSTANT, coefficient)
    }

    pub fn monomial(index: MultiIndex, coefficient: GcMatrix) -> Self {
        let mut p = Self::new();
        p.add_term(index, coefficient);
        p
    }

    /// Adds `coefficient · ∂^index`, merging with an existing term.
    ///
    /// # Panics
    /// If any order in `index` exceeds [`MAX_ORDER`].
    pub fn add_term(&mut self, index: MultiIndex, coefficient: GcMatrix) {
        assert!(
            index.0.iter().all(|&o| o <= MAX_ORDER),
            "derivative order above {MAX_ORDER}"
        );
        let sum = self.coefficient(&index) + coefficient;
        if sum.is_zero() {
            self.terms.remove(&index);
        } else {
            self.terms.insert(index, sum);
        }
    }

    pub fn coefficient(&self, index: &MultiIndex) -> GcMatrix {
        self.terms.get(index).copied().unwrap_or(GcMatrix::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GcMatrix)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_total_order(&self) -> u32 {
        self.terms.keys().map(MultiIndex::total).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(*idx, *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(*idx, -*c);
        }
        out
    }

    /// `self - m·I`, the operator whose kernel is the solution set of
    /// `self ψ = mψ`.
    pub fn with_mass(&self, m: f64) -> Self {
        self.sub(&Self::constant(GcMatrix::IDENTITY.scale(m)))
    }

    /// Formal product for constant coefficients: monomial indices add and
    /// coefficients multiply as `P_α Q_β` with `P` on the left.
    ///
    /// Symbols commute, so `∂_μ∂_ν` collects `P_μ Q_ν + P_ν Q_μ`; for
    /// `P = Q = 𝓗` that is the anticommutator `{γ^μ, γ^ν}`.
    pub fn compose(&self, alg: &GcAlgebra, other: &Self) -> Result<Self> {
        let mut out = Self::new();
        for (a, pa) in self.terms() {
            for (b, qb) in other.terms() {
                let idx = a.checked_add(b).ok_or_else(|| {
                    Error::Domain(format!(
                        "product of {a} and {b} exceeds derivative order {MAX_ORDER}"
                    ))
                })?;
                out.add_term(idx, alg.mat_mul(pa, qb));
            }
        }
        Ok(out)
    }

    /// Coefficient of `∂_μ∂_ν` written as a symmetric tensor: the monomial
    /// coefficient for `μ = ν`, half of it otherwise (each unordered pair is
    /// shared between `∂_μ∂_ν` and `∂_ν∂_μ`).
    pub fn pair_coefficient(&self, mu: Axis, nu: Axis) -> GcMatrix {
        let c = self.coefficient(&MultiIndex::pair(mu, nu));
        if mu == nu {
            c
        } else {
            c.scale(0.5)
        }
    }

    /// The scalar differential expression in row `row`, column `col`.
    pub fn entry(&self, row: usize, col: usize) -> BTreeMap<MultiIndex, GcNumber> {
        self.terms
            .iter()
            .map(|(idx, m)| (*idx, m.entry(row, col)))
            .filter(|(_, q)| *q != GcNumber::ZERO)
            .collect()
    }

    /// Renders one entry, e.g. `-j∂_x - i∂_y + j∂_t`.
    pub fn format_entry(&self, row: usize, col: usize) -> String {
        let names = StructureConstantsTable::gc();
        let mut terms: Vec<(MultiIndex, GcNumber)> = self.entry(row, col).into_iter().collect();
        terms.sort_by_key(|(idx, _)| idx.display_key());

        let mut out = String::new();
        for (idx, q) in terms {
            let coeff = names.format_coeffs(&q.to_array());
            let symbol = if idx.total() == 0 { String::new() } else { idx.to_string() };
            let term = match coeff.as_str() {
                "1" if !symbol.is_empty() => symbol,
                "-1" if !symbol.is_empty() => format!("-{symbol}"),
                c if c[1..].contains(' ') && !symbol.is_empty() => format!("({c}){symbol}"),
                c => format!("{c}{symbol}"),
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `𝓗 = γ⁰∂_t + γ¹∂_x + γ²∂_y + γ³∂_z` (mass handled by
/// [`DiffOpPoly::with_mass`]).
pub fn build_dirac_operator() -> DiffOpPoly {
    let mut h = DiffOpPoly::new();
    for axis in Axis::ALL {
        h.add_term(MultiIndex::first(axis), gamma(axis));
    }
    h
}

/// `diag(∂_x² + ∂_y² + ∂_z² - ∂_t²)`
pub fn klein_gordon_symbol() -> DiffOpPoly {
    let mut kg = DiffOpPoly::new();
    for axis in Axis::ALL {
        let sign = if axis == Axis::T { -1.0 } else { 1.0 };
        kg.add_term(MultiIndex::pair(axis, axis), GcMatrix::IDENTITY.scale(sign));
    }
    kg
}

/// Formal product under the standard algebra.
pub fn compose_symbol(p: &DiffOpPoly, q: &DiffOpPoly) -> Result<DiffOpPoly> {
    p.compose(GcAlgebra::standard(), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirac_coefficients() {
        let h = build_dirac_operator();
        assert_eq!(h.len(), 4);
        assert_eq!(
            h.coefficient(&MultiIndex::first(Axis::T)),
            GcMatrix::new([[GcNumber::ZERO, GcNumber::J], [GcNumber::J, GcNumber::ZERO]])
        );
        assert!(h.coefficient(&MultiIndex::pair(Axis::X, Axis::Y)).is_zero());
        assert_eq!(h.max_total_order(), 1);
    }

    #[test]
    fn assembled_entries() {
        let op = build_dirac_operator().with_mass(2.0);
        assert_eq!(op.format_entry(0, 1), "-j∂_x - i∂_y + j∂_t");
        assert_eq!(op.format_entry(1, 0), "j∂_x + i∂_y + j∂_t");
        assert_eq!(op.format_entry(0, 0), "-2 + ∂_z");
        assert_eq!(op.format_entry(1, 1), "-2 - ∂_z");

        let e01 = op.entry(0, 1);
        assert_eq!(e01.len(), 3);
        assert_eq!(e01[&MultiIndex::first(Axis::X)], -GcNumber::J);
        assert_eq!(e01[&MultiIndex::first(Axis::Y)], -GcNumber::I);
        assert_eq!(e01[&MultiIndex::first(Axis::T)], GcNumber::J);
    }

    #[test]
    fn squares_to_klein_gordon() {
        let h = build_dirac_operator();
        let h2 = compose_symbol(&h, &h).unwrap();
        assert_eq!(h2, klein_gordon_symbol());
        assert!(h2.pair_coefficient(Axis::X, Axis::Y).is_zero());
        assert_eq!(h2.pair_coefficient(Axis::T, Axis::T), -GcMatrix::IDENTITY);
        assert_eq!(h2.format_entry(0, 0), "∂_x^2 + ∂_y^2 + ∂_z^2 - ∂_t^2");
        assert_eq!(h2.format_entry(0, 1), "0");
    }

    #[test]
    fn identity_constant_is_neutral() {
        let h = build_dirac_operator().with_mass(0.7);
        let one = DiffOpPoly::constant(GcMatrix::IDENTITY);
        assert_eq!(compose_symbol(&one, &h).unwrap(), h);
        assert_eq!(compose_symbol(&h, &one).unwrap(), h);
    }

    #[test]
    fn order_overflow_is_an_error() {
        let kg = klein_gordon_symbol();
        assert!(matches!(compose_symbol(&kg, &kg), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = DiffOpPoly::new();
        p.add_term(MultiIndex::first(Axis::X), GcMatrix::IDENTITY);
        p.add_term(MultiIndex::first(Axis::X), -GcMatrix::IDENTITY);
        assert!(p.is_empty());
        p.add_term(MultiIndex::CONSTANT, GcMatrix::ZERO);
        assert!(p.is_empty());
    }
}
