//! Numerical toolkit for mu-deformed Segal-Bargmann analysis.
//!
//! The deformation is driven by a parameter `mu >= 0` through the deformed
//! factorial `gamma_mu(n)` (see [`special::gamma_mu`]); `mu = 0` recovers the
//! classical Gaussian picture. The crate provides:
//!
//! * [`special`]: the deformed factorial and exponential, deformed Hermite
//!   polynomials, the Macdonald function `K_alpha`, and classical gamma/beta.
//! * [`measure`]: the ground-state measure on the line, the parity pair of
//!   measures on the plane, and deterministic adaptive quadrature for both.
//! * [`transform`]: the Segal-Bargmann transform (closed form on polynomials
//!   and by quadrature), ladder operators, and energy functionals.
//! * [`functional`]: Lp norms, entropy, Hille-Tamarkin norms of the transform
//!   kernel, and interpolation-index helpers.
//! * [`inequality`]: the boundedness region of the transform and checks for
//!   the Hausdorff-Young, Hirschman, and logarithmic Sobolev inequalities.
//!
//! Every check produces a [`functional::CheckReport`] whose `margin` carries
//! the quadrature error budget, so a failure is distinguishable from noise.

pub mod functional;
pub mod inequality;
pub mod measure;
pub mod params;
pub mod poly;
pub mod quad;
pub mod special;
pub mod transform;

pub use functional::CheckReport;
pub use measure::{Parity, ParityPair, QuadratureSpec};
pub use params::DeformParams;
pub use poly::ComplexPoly;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Adaptive refinement stalled before reaching the requested tolerance.
    /// The best estimate and its error bound are preserved.
    #[error("tolerance not met: requested {requested:.3e}, achieved {achieved:.3e} (best estimate {value:.17e})")]
    ToleranceNotMet {
        value: f64,
        achieved: f64,
        requested: f64,
    },
    /// An integral whose integrand fails to decay; no finite value exists or
    /// none is reachable at the working precision.
    #[error("non-convergent integral: {0}")]
    NonConvergent(String),
    /// A finite-precision overflow that would silently corrupt results.
    #[error("overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
