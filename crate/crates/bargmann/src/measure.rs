//! The measures of the deformed analysis and quadrature over them.
//!
//! Two families of measures appear in every functional below: a weighted
//! Gaussian on the line, `dg(t) = Gamma(mu+1/2)^{-1} exp(-t^2) |t|^{2mu} dt`,
//! and a parity pair on the plane whose densities combine a Macdonald
//! function of order `mu -+ 1/2` with the power `|lambda^{1/2} z|^{2mu+1}`.
//! At `mu = 0` both plane densities collapse to the Gaussian
//! `(lambda/pi) exp(-lambda |z|^2)`.
//!
//! Plane integrals run in polar form. The radial direction substitutes
//! `s = lambda r^2` so the Macdonald argument is the integration variable and
//! node placement is independent of the dilation; a geometrically graded mesh
//! near `s = 0` resolves the `s^{2mu}`-type cusp of the even density. The
//! angular direction uses a uniform trapezoid rule, spectrally accurate for
//! the smooth periodic integrands that arise here; its error is estimated
//! against the half-resolution grid and folded into the reported estimate.

use crate::poly::ComplexPoly;
use crate::quad::{integrate_breakpoints, QuadElem, QuadOutcome};
use crate::special::{gamma, macdonald_k};
use crate::{DeformParams, Error, Result};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// Channel selector for the plane measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Order of the Macdonald function in this channel's density.
    pub fn macdonald_order(self, mu: f64) -> f64 {
        match self {
            Parity::Even => mu - 0.5,
            Parity::Odd => mu + 0.5,
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }
}

/// A value carried on both parity channels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParityPair<T> {
    pub even: T,
    pub odd: T,
}

impl<T> ParityPair<T> {
    pub fn new(even: T, odd: T) -> Self {
        Self { even, odd }
    }

    pub fn get(&self, parity: Parity) -> &T {
        match parity {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn map<U>(self, mut f: impl FnMut(T) -> U) -> ParityPair<U> {
        ParityPair {
            even: f(self.even),
            odd: f(self.odd),
        }
    }
}

/// Split a polynomial into its even and odd parts; the parts sum back to the
/// input exactly (coefficient selection, no arithmetic).
pub fn parity_split(f: &ComplexPoly) -> ParityPair<ComplexPoly> {
    ParityPair::new(f.even_part(), f.odd_part())
}

/// Controls for the adaptive integrators.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Radial truncation of plane integrals.
    pub r_max: f64,
    /// Truncation of line integrals.
    pub t_max: f64,
    /// Angular nodes for plane integrals; even, at least 8.
    pub n_angular: usize,
    /// Subdivision limit per radial or line panel.
    pub max_depth: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            r_max: 8.0,
            t_max: 10.0,
            n_angular: 64,
            max_depth: 28,
        }
    }
}

impl QuadratureSpec {
    /// Radius beyond which the plane densities are below roundoff. The decay
    /// scale is `exp(-lambda r^2)`, so shrinking `lambda` below 1 pushes the
    /// radius out.
    pub fn recommended_r_max(lambda: f64) -> f64 {
        (3.0 / lambda.min(1.0).sqrt()).max(6.0)
    }
}

/// Density of the ground-state probability measure on the line,
/// `exp(-t^2) |t|^{2mu} / Gamma(mu+1/2)`.
pub fn ground_state_density(params: DeformParams, t: f64) -> f64 {
    let mu = params.mu();
    (-t * t).exp() * t.abs().powf(2.0 * mu) / gamma(mu + 0.5)
}

/// Density of the plane measure at `z` on one parity channel:
/// `lambda 2^{1/2-mu}/(pi Gamma(mu+1/2)) K_{mu-+1/2}(lambda|z|^2)
/// |lambda^{1/2} z|^{2mu+1}`.
///
/// The limit at `z = 0` is finite on both channels: `lambda/pi` on the odd
/// channel and at `mu = 0`, zero on the even channel for `mu > 0` (the
/// density behaves like `|z|^{4mu}` there, a cusp but not a pole).
pub fn nu_density(params: DeformParams, z: Complex64, parity: Parity) -> Result<f64> {
    let mu = params.mu();
    let lambda = params.lambda();
    let s = lambda * z.norm_sqr();
    if s == 0.0 {
        let limit = match parity {
            Parity::Odd => lambda / PI,
            Parity::Even if mu == 0.0 => lambda / PI,
            Parity::Even => 0.0,
        };
        return Ok(limit);
    }
    let k = macdonald_k(parity.macdonald_order(mu), s)?;
    let pref = lambda * 0.5f64.powf(mu - 0.5) / (PI * gamma(mu + 0.5));
    Ok(pref * k * s.powf(mu + 0.5))
}

/// Closed form of the odd-channel total mass,
/// `sqrt(pi) Gamma(mu+1) / Gamma(mu+1/2)`; the even channel is a probability
/// measure.
pub fn odd_mass_closed_form(params: DeformParams) -> f64 {
    let mu = params.mu();
    PI.sqrt() * gamma(mu + 1.0) / gamma(mu + 0.5)
}

/// Weight under a line integral.
#[derive(Debug, Clone, Copy)]
pub enum LineWeight {
    Lebesgue,
    /// The ground-state probability density.
    GroundState(DeformParams),
    /// `exp(-t^2) |t|^{2mu}` without the normalizing constant.
    GaussPower(DeformParams),
}

impl LineWeight {
    fn eval(&self, t: f64) -> f64 {
        match *self {
            LineWeight::Lebesgue => 1.0,
            LineWeight::GroundState(p) => ground_state_density(p, t),
            LineWeight::GaussPower(p) => (-t * t).exp() * t.abs().powf(2.0 * p.mu()),
        }
    }
}

fn line_breaks(t_max: f64) -> Vec<f64> {
    // geometric grading toward 0 resolves the |t|^{2mu} cusp
    let mut b = Vec::with_capacity(23);
    b.push(-t_max);
    for k in 1..=10 {
        b.push(-t_max * 0.25f64.powi(k));
    }
    b.push(0.0);
    for k in (1..=10).rev() {
        b.push(t_max * 0.25f64.powi(k));
    }
    b.push(t_max);
    b
}

/// Integrate `f` over `[-t_max, t_max]` against the chosen weight.
///
/// The weighted integrand must have decayed below `abs_tol` at the
/// truncation ends; with the Gaussian weights the default range is ample.
pub fn integrate_line<T: QuadElem>(
    mut f: impl FnMut(f64) -> T,
    weight: LineWeight,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<T>> {
    let breaks = line_breaks(spec.t_max);
    let out = integrate_breakpoints(
        |t| f(t).scale(weight.eval(t)),
        &breaks,
        spec.abs_tol,
        spec.rel_tol,
        spec.max_depth,
    );
    if !out.converged {
        return Err(Error::ToleranceNotMet {
            value: out.value.magnitude(),
            achieved: out.err,
            requested: spec.abs_tol.max(spec.rel_tol * out.value.magnitude()),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy)]
pub(crate) struct AngularPair<T> {
    pub(crate) fine: T,
    pub(crate) coarse: T,
}

impl<T: QuadElem> AngularPair<T> {
    pub(crate) fn zero_pair() -> Self {
        <Self as QuadElem>::zero()
    }
    pub(crate) fn new_pair(fine: T, coarse: T) -> Self {
        AngularPair { fine, coarse }
    }
}

impl<T: QuadElem> QuadElem for AngularPair<T> {
    fn zero() -> Self {
        AngularPair {
            fine: T::zero(),
            coarse: T::zero(),
        }
    }
    fn add(self, rhs: Self) -> Self {
        AngularPair {
            fine: self.fine.add(rhs.fine),
            coarse: self.coarse.add(rhs.coarse),
        }
    }
    fn sub(self, rhs: Self) -> Self {
        AngularPair {
            fine: self.fine.sub(rhs.fine),
            coarse: self.coarse.sub(rhs.coarse),
        }
    }
    fn scale(self, s: f64) -> Self {
        AngularPair {
            fine: self.fine.scale(s),
            coarse: self.coarse.scale(s),
        }
    }
    fn magnitude(self) -> f64 {
        self.fine.magnitude()
    }
}

fn plane_breaks(s_max: f64) -> Vec<f64> {
    let mut b = Vec::with_capacity(14);
    b.push(0.0);
    for k in (0..=12).rev() {
        b.push(s_max * 0.25f64.powi(k));
    }
    b
}

/// Integral of `f` against one parity channel of the plane measure, with an
/// optional radial multiplier.
///
/// `radial_factor(s)` (with `s = lambda |z|^2`) multiplies the density;
/// radial-only factors belong here rather than inside `f` so the Macdonald
/// evaluation count stays independent of the angular resolution.
pub fn plane_integral<T: QuadElem>(
    params: DeformParams,
    parity: Parity,
    spec: &QuadratureSpec,
    mut radial_factor: impl FnMut(f64) -> f64,
    mut f: impl FnMut(Complex64) -> T,
) -> Result<QuadOutcome<T>> {
    assert!(
        spec.n_angular >= 8 && spec.n_angular % 2 == 0,
        "n_angular must be even and at least 8"
    );
    let mu = params.mu();
    let lambda = params.lambda();
    let order = parity.macdonald_order(mu);
    let s_max = lambda * spec.r_max * spec.r_max;
    let n = spec.n_angular;
    let pref = 0.5f64.powf(mu - 0.5) / (2.0 * PI * gamma(mu + 0.5));
    let mut failure: Option<Error> = None;

    let mut radial = |s: f64| -> AngularPair<T> {
        if failure.is_some() || s <= 0.0 {
            return AngularPair::zero();
        }
        let k = match macdonald_k(order, s) {
            Ok(k) => k,
            Err(e) => {
                failure = Some(e);
                return AngularPair::zero();
            }
        };
        if k == 0.0 {
            return AngularPair::zero();
        }
        let w = pref * k * s.powf(mu + 0.5) * radial_factor(s);
        if !w.is_finite() {
            failure = Some(Error::NonConvergent(format!(
                "radial weight not finite at s = {s:.3e}"
            )));
            return AngularPair::zero();
        }
        if w == 0.0 {
            return AngularPair::zero();
        }
        let r = (s / lambda).sqrt();
        let mut fine = T::zero();
        let mut coarse = T::zero();
        for j in 0..n {
            let v = f(Complex64::from_polar(r, TAU * j as f64 / n as f64));
            fine = fine.add(v);
            if j % 2 == 0 {
                coarse = coarse.add(v);
            }
        }
        AngularPair {
            fine: fine.scale(w * TAU / n as f64),
            coarse: coarse.scale(w * TAU / (n / 2) as f64),
        }
    };

    // The Macdonald evaluation carries a relative noise floor of a few 1e-8
    // near integer orders in its series-to-asymptotic transition band, and
    // bisection cannot refine below it; budgets tighter than the floor only
    // make the subdivision tree explode.
    let rel_eff = spec.rel_tol.max(2e-8);
    let depth_eff = spec.max_depth.min(12);
    let breaks = plane_breaks(s_max);
    let out = integrate_breakpoints(&mut radial, &breaks, spec.abs_tol, rel_eff, depth_eff);
    // probe the outer edge: the density must have absorbed the integrand by
    // r_max, otherwise the truncated result is meaningless
    let edge = radial(0.98 * s_max)
        .fine
        .magnitude()
        .max(radial(0.999 * s_max).fine.magnitude());
    if let Some(e) = failure {
        return Err(e);
    }
    let value = out.value.fine;
    let budget = spec.abs_tol.max(rel_eff * value.magnitude());
    let tail_estimate = edge * 0.05 * s_max;
    if tail_estimate > 100.0 * budget && tail_estimate > spec.abs_tol {
        return Err(Error::NonConvergent(format!(
            "plane integrand has not decayed at r_max (outer-shell estimate {tail_estimate:.3e})"
        )));
    }
    let err = out.err + out.value.fine.sub(out.value.coarse).magnitude();
    if !out.converged {
        return Err(Error::ToleranceNotMet {
            value: value.magnitude(),
            achieved: err,
            requested: budget,
        });
    }
    Ok(QuadOutcome {
        value,
        err,
        converged: true,
        evals: out.evals,
    })
}

/// Sum of the even-channel integral of `even` and the odd-channel integral
/// of `odd`.
pub fn integrate_plane<T: QuadElem>(
    params: DeformParams,
    spec: &QuadratureSpec,
    even: impl FnMut(Complex64) -> T,
    odd: impl FnMut(Complex64) -> T,
) -> Result<QuadOutcome<T>> {
    let e = plane_integral(params, Parity::Even, spec, |_| 1.0, even)?;
    let o = plane_integral(params, Parity::Odd, spec, |_| 1.0, odd)?;
    Ok(QuadOutcome {
        value: e.value.add(o.value),
        err: e.err + o.err,
        converged: true,
        evals: e.evals + o.evals,
    })
}

/// Total mass of one parity channel, by quadrature.
pub fn parity_mass(params: DeformParams, parity: Parity, spec: &QuadratureSpec) -> Result<QuadOutcome<f64>> {
    plane_integral(params, parity, spec, |_| 1.0, |_| 1.0)
}
