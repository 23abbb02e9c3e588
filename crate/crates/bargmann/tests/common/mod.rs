//! Shared fixtures for integration tests: frozen high-precision reference
//! values (generated offline by `tools/reference_values.py` at 50+ decimal
//! digits) and small helpers.

#![allow(dead_code)]

pub mod reference;

use bargmann::DeformParams;
use num_complex::Complex64;

pub fn params(mu: f64, lambda: f64) -> DeformParams {
    DeformParams::new(mu, lambda).unwrap()
}

pub fn c(pair: [f64; 2]) -> Complex64 {
    Complex64::new(pair[0], pair[1])
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

pub fn rel_err_c(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}
