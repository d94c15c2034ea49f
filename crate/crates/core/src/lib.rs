//! Generalized complex numbers and a two-dimensional Dirac operator over them.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`] is a generic engine for finite-dimensional real algebras
//!   given by structure constants `e_A e_B = Σ_C f[A][B][C] e_C`, with
//!   exhaustive basis-level law checkers.
//! * [`gc`] is the three-dimensional instance with basis `{1, i, j}`,
//!   `ii = jj = -1` and `ij = ji = 0`: commutative, not associative, and with
//!   zero divisors. It also carries the polar chart, the exponential, the
//!   fixed-azimuth sub-algebra and the modulus postulate checks.
//! * [`matrix`] holds 2×2 matrices over that algebra and the four gamma
//!   matrices.
//! * [`dirac`] builds the first-order Dirac operator as a polynomial in
//!   derivative symbols, squares it, and checks the 1+1 dimensional plane
//!   wave solution.

pub mod algebra;
pub mod dirac;
mod error;
pub mod gc;
pub mod matrix;

pub use error::{Error, Result};
