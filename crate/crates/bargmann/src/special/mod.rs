//! Deformed special functions: the deformed factorial `gamma_mu`, the
//! deformed exponential `e_mu` (power series, integral representation, and a
//! hybrid evaluator sound at large argument), the deformed Hermite
//! polynomials, and the Macdonald function.

pub mod gamma;
pub mod macdonald;

pub use gamma::{beta, gamma, ln_gamma, recip_gamma, sin_pi};
pub use macdonald::{macdonald_k, macdonald_k_asymptotic, macdonald_k_oracle};

use crate::params::DeformParams;
use crate::poly::ComplexPoly;
use crate::quad::{self, QuadElem};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// Recursion step factor `n + 2 mu theta(n)` where `theta(n) = 1` for odd
/// `n`, 0 for even `n`.
#[inline]
pub(crate) fn recursion_step(mu: f64, n: u32) -> f64 {
    n as f64 + if n % 2 == 1 { 2.0 * mu } else { 0.0 }
}

#[inline]
pub(crate) fn gamma_mu_raw(mu: f64, n: u32) -> f64 {
    (1..=n).map(|k| recursion_step(mu, k)).product()
}

/// Deformed factorial: `gamma_mu(0) = 1`,
/// `gamma_mu(n) = (n + 2 mu theta(n)) gamma_mu(n-1)`.
/// Reduces to `n!` at `mu = 0` and dominates `n!` for `mu >= 0`.
pub fn gamma_mu(params: DeformParams, n: u32) -> Result<f64> {
    let mu = params.mu();
    let mut acc = 1.0_f64;
    for k in 1..=n {
        acc *= recursion_step(mu, k);
        if !acc.is_finite() {
            return Err(Error::Overflow(format!(
                "gamma_mu(mu={mu}, n={k}) exceeds the floating-point range"
            )));
        }
    }
    Ok(acc)
}

/// Partial sum of the deformed exponential series `sum_n z^n / gamma_mu(n)`,
/// truncated once a geometric bound on the tail drops below `tol` relative
/// to `max(|partial sum|, 1)`.
pub fn e_mu_series(params: DeformParams, z: Complex64, tol: f64) -> Complex64 {
    let mu = params.mu();
    let r = z.norm();
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut n = 1u32;
    while n <= 60_000 {
        term *= z / recursion_step(mu, n);
        sum += term;
        // once successive ratios fall below 1/2 the tail is geometrically
        // bounded by twice the next term
        let ratio = r / (n + 1) as f64;
        if ratio < 0.5 && 2.0 * term.norm() * ratio <= tol * sum.norm().max(1.0) {
            break;
        }
        n += 1;
    }
    sum
}

const EMU_SERIES_LIMIT: f64 = 10.0;
const EMU_SERIES_LIMIT_LEFT: f64 = 14.0;

/// Deformed exponential, hybrid evaluation.
///
/// The power series is accurate for moderate `|z|` but near the imaginary
/// axis its cancellation noise grows like `eps * exp|z|` while the true value
/// decays, so beyond `|z| = 10` the even and odd parts are evaluated through
/// the large-argument expansions of their Bessel-type components. Arguments
/// in the left half plane use the parity reflection
/// `e_mu(z) = even(-z) - odd(-z)`, whose own cancellation amplifies the
/// expansion plateau; the series region extends further on that side to
/// compensate.
pub fn e_mu(params: DeformParams, z: Complex64) -> Complex64 {
    let mu = params.mu();
    if mu == 0.0 {
        return z.exp();
    }
    let r = z.norm();
    if r <= EMU_SERIES_LIMIT || (z.re < 0.0 && r <= EMU_SERIES_LIMIT_LEFT) {
        e_mu_series(params, z, 1e-14)
    } else if z.re >= 0.0 {
        let (even, odd) = e_mu_asym_parts(mu, z);
        even + odd
    } else {
        let (even, odd) = e_mu_asym_parts(mu, -z);
        even - odd
    }
}

/// One component of the large-argument expansion:
/// `sum_k sgn^k c_k(nu) / w^k` with `c_k` the usual Hankel coefficients,
/// truncated at the smallest term plus half of the first omitted one.
fn hankel_sum(nu: f64, w: Complex64, sgn: f64) -> Complex64 {
    let four_nu2 = 4.0 * nu * nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 1u32;
    loop {
        let odd = (2 * k - 1) as f64;
        let next = term * (sgn * (four_nu2 - odd * odd)) / (w * (8.0 * k as f64));
        // terms may grow while (2k-1)^2 < 4 nu^2; only growth past that
        // point signals the divergent tail (for half-integer nu the series
        // terminates before reaching it)
        let past_hump = odd * odd > four_nu2;
        if (past_hump && next.norm() >= term.norm()) || k > 200 {
            sum += 0.5 * next;
            break;
        }
        sum += next;
        if next.norm() <= 1e-17 * sum.norm() {
            break;
        }
        term = next;
        k += 1;
    }
    sum
}

/// Even and odd parts of `e_mu` at large `|w|`, `Re w >= 0`. Both parts are
/// `Gamma(mu+1/2) (w/2)^{1/2-mu}` times a Bessel-I function of order
/// `mu -+ 1/2`; each `I` contributes a dominant `exp(w)` and a recessive
/// `exp(-w)` branch, the latter carrying the phase `exp(i s pi mu)` with
/// `s = sign(Im w)`.
fn e_mu_asym_parts(mu: f64, w: Complex64) -> (Complex64, Complex64) {
    let nu1 = mu - 0.5;
    let nu2 = mu + 0.5;
    let s = if w.im >= 0.0 { 1.0 } else { -1.0 };
    let phase = Complex64::from_polar(1.0, s * PI * mu);
    let pref = gamma(mu + 0.5) * (0.5 * w).powc(Complex64::new(0.5 - mu, 0.0))
        / (TAU * w).sqrt();
    let ew = w.exp();
    let emw = (-w).exp();
    let even = pref * (ew * hankel_sum(nu1, w, -1.0) + emw * phase * hankel_sum(nu1, w, 1.0));
    let odd = pref * (ew * hankel_sum(nu2, w, -1.0) - emw * phase * hankel_sum(nu2, w, 1.0));
    (even, odd)
}

/// Integral representation of the deformed exponential for `mu > 0`:
/// the average of `exp(t z)` against the probability density
/// `(1-t)^{mu-1} (1+t)^mu / B(1/2, mu)` on `[-1, 1]`.
///
/// Both endpoints are regularized by power substitutions (`t = 1 - u^{1/mu}`
/// on the right, `t = v^{1/(mu+1)} - 1` on the left), which cancel the factor
/// carrying the endpoint exponent exactly and leave bounded integrands.
/// Serves as an independent cross-check of [`e_mu_series`].
pub fn e_mu_integral(params: DeformParams, z: Complex64) -> Result<Complex64> {
    let mu = params.mu();
    if mu <= 0.0 {
        return Err(Error::Domain(format!(
            "the integral representation needs mu > 0, got mu={mu}"
        )));
    }
    // graded toward 0 where the substitutions have unbounded derivatives
    let mut breaks = vec![0.0_f64];
    for k in (0..=12).rev() {
        breaks.push(0.25_f64.powi(k));
    }
    let inv_mu = 1.0 / mu;
    let right = quad::integrate_breakpoints(
        |u: f64| {
            let w = u.powf(inv_mu);
            ((1.0 - w) * z).exp() * (2.0 - w).powf(mu)
        },
        &breaks,
        1e-13,
        1e-12,
        30,
    );
    let inv_mu1 = 1.0 / (mu + 1.0);
    let left = quad::integrate_breakpoints(
        |v: f64| {
            let w = v.powf(inv_mu1);
            ((w - 1.0) * z).exp() * (2.0 - w).powf(mu - 1.0)
        },
        &breaks,
        1e-13,
        1e-12,
        30,
    );
    if !right.converged || !left.converged {
        let value = (right.value * inv_mu + left.value * inv_mu1) / beta(0.5, mu);
        return Err(Error::ToleranceNotMet {
            value: value.magnitude(),
            achieved: right.err * inv_mu + left.err * inv_mu1,
            requested: 1e-12,
        });
    }
    Ok((right.value * inv_mu + left.value * inv_mu1) / beta(0.5, mu))
}

/// Deformed Hermite polynomial, the coefficient of `z^n/n!` in
/// `exp(-z^2) e_mu(2tz)`:
/// `H_n(t) = n! sum_{2j+k=n} (-1)^j (2t)^k / (j! gamma_mu(k))`.
/// Coefficients are exact rationals in `mu` evaluated in floating point;
/// degrees much beyond 100 overflow the intermediate factorials.
pub fn hermite_mu(params: DeformParams, n: u32) -> ComplexPoly {
    let mu = params.mu();
    let n_fact: f64 = (1..=n).map(|k| k as f64).product();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize + 1];
    let mut j_fact = 1.0_f64;
    for j in 0..=(n / 2) {
        if j > 0 {
            j_fact *= j as f64;
        }
        let k = n - 2 * j;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * n_fact * (2.0_f64).powi(k as i32) / (j_fact * gamma_mu_raw(mu, k));
        coeffs[k as usize] = Complex64::new(c, 0.0);
    }
    ComplexPoly::new(coeffs)
}
