//! The Dirac operator `𝓗 = γ^μ ∂_μ` and its 1+1 dimensional plane waves.

mod operator;
mod plane_wave;
mod residual;

pub use operator::{build_dirac_operator, compose_symbol, klein_gordon_symbol, DiffOpPoly, MultiIndex};
pub use plane_wave::{spinor_ratio, Branch, PlaneWave};
pub use residual::{residual_check, sample_points, ResidualReport, DEFAULT_STEP};
