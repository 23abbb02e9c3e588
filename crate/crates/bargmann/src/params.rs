//! Deformation and dilation parameters.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// The pair `(mu, lambda)`: `mu >= 0` is the deformation strength,
/// `lambda > 0` the dilation of the plane measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeformParams {
    mu: f64,
    lambda: f64,
}

impl DeformParams {
    pub fn new(mu: f64, lambda: f64) -> Result<Self> {
        if !mu.is_finite() || mu < 0.0 {
            return Err(Error::Domain(format!(
                "deformation parameter mu must be finite and >= 0, got {mu}"
            )));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::Domain(format!(
                "dilation parameter lambda must be finite and > 0, got {lambda}"
            )));
        }
        Ok(Self { mu, lambda })
    }

    /// Undilated parameters (`lambda = 1`).
    pub fn undeformed_scale(mu: f64) -> Result<Self> {
        Self::new(mu, 1.0)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Same deformation, different dilation.
    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Self::new(self.mu, lambda)
    }
}
