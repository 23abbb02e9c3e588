//! The boundedness region of the transform and the verified inequalities.
//!
//! Each `check_*` function evaluates both sides of one inequality or
//! identity numerically and returns a [`CheckReport`]. A failing report is
//! evidence against the numerics, not the mathematics: a negative margin
//! beyond the quadrature budget flags the run for escalation (tighter
//! tolerances, larger domains).

use crate::functional::{
    entropy, hille_tamarkin_norm, interp_scale, kappa, lp_norm_line, lp_norm_plane, CheckReport,
    EntropySpace,
};
use crate::measure::{
    integrate_line, parity_split, plane_integral, LineWeight, Parity, QuadratureSpec,
};
use crate::poly::ComplexPoly;
use crate::quad::QuadOutcome;
use crate::special::e_mu;
use crate::transform::{apply_b_poly, dilation_energy, poly_to_coeffs, Basis};
use crate::{DeformParams, Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// A point of the boundedness diagram: reciprocal exponents and the
/// dilation.
#[derive(Debug, Clone, Copy)]
pub struct RegionQuery {
    pub p_inv: f64,
    pub q_inv: f64,
    pub lambda: f64,
}

impl RegionQuery {
    pub fn new(p_inv: f64, q_inv: f64, lambda: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&p_inv) {
            return Err(Error::Domain(format!(
                "reciprocal domain exponent must lie in [0,1), got {p_inv}"
            )));
        }
        if !(q_inv > 0.0 && q_inv <= 1.0) {
            return Err(Error::Domain(format!(
                "reciprocal target exponent must lie in (0,1], got {q_inv}"
            )));
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "dilation must be positive and finite, got {lambda}"
            )));
        }
        Ok(RegionQuery {
            p_inv,
            q_inv,
            lambda,
        })
    }
}

/// Whether the transform is bounded `L^p -> q`-space at the query point:
/// `1/q` must exceed both the hyperbola `(1/p) / (2 lambda (1 - 1/p))` and
/// the horizontal cut `1/(2 lambda)`.
pub fn region_holds(query: &RegionQuery) -> bool {
    let hyperbola = query.p_inv / ((1.0 - query.p_inv) * 2.0 * query.lambda);
    query.q_inv > hyperbola && query.q_inv > 1.0 / (2.0 * query.lambda)
}

/// The infimum of dilations above which `(p_inv, q_inv)` lies in the
/// region; at the threshold itself the point is still outside.
pub fn lambda_threshold(p_inv: f64, q_inv: f64) -> Result<f64> {
    let probe = RegionQuery::new(p_inv, q_inv, 1.0)?;
    let horizontal = 1.0 / (2.0 * probe.q_inv);
    let hyperbola = probe.p_inv / (2.0 * probe.q_inv * (1.0 - probe.p_inv));
    Ok(horizontal.max(hyperbola))
}

/// Boundary rows `(p_inv, q_inv_boundary, q_inv_cut)` of the region at a
/// fixed dilation. `q_inv_boundary` samples the hyperbola
/// `p_inv / (2 lambda (1 - p_inv))` up to the point where it reaches 1;
/// `q_inv_cut` is the constant horizontal cut `1 / (2 lambda)`. A point
/// belongs to the region when its `q_inv` strictly exceeds both columns.
pub fn region_boundary_csv(lambda: f64, n_samples: usize) -> Result<Vec<(f64, f64, f64)>> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!(
            "dilation must be positive and finite, got {lambda}"
        )));
    }
    if n_samples < 2 {
        return Err(Error::Domain(
            "boundary sampling needs at least two rows".into(),
        ));
    }
    let p_top = 2.0 * lambda / (2.0 * lambda + 1.0);
    let cut = 1.0 / (2.0 * lambda);
    let mut rows = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let p_inv = p_top * i as f64 / (n_samples - 1) as f64;
        let hyperbola = (p_inv / ((1.0 - p_inv) * 2.0 * lambda)).min(1.0);
        rows.push((p_inv, hyperbola, cut));
    }
    Ok(rows)
}

fn named(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// `|e_mu(z)|^q <= e_mu(q Re z)` for `q >= 1`, with equality at `mu = 0`.
pub fn check_exp_power_bound(params: DeformParams, q: f64, z: Complex64) -> Result<CheckReport> {
    if !(q >= 1.0) {
        return Err(Error::Domain(format!("power must be >= 1, got {q}")));
    }
    let lhs = e_mu(params, z).norm().powf(q);
    let rhs = e_mu(params, Complex64::new(q * z.re, 0.0)).re;
    let quad_err = 1e-11 * (lhs.abs() + rhs.abs());
    Ok(CheckReport::new(
        "exp-power-bound",
        named(&[("mu", params.mu()), ("q", q), ("re_z", z.re), ("im_z", z.im)]),
        lhs,
        rhs,
        quad_err,
    ))
}

/// The Gaussian moment identity behind the sharp constant: the deformed
/// exponential integrates against the ground-state measure to
/// `exp(c^2 x^2 / 2)` with `c` the conjugate-exponent scale.
pub fn check_moment_identity(
    params: DeformParams,
    p_prime: f64,
    x: f64,
    spec: &QuadratureSpec,
) -> Result<CheckReport> {
    let scale = 2.0f64.sqrt() * p_prime * x;
    let integral = integrate_line(
        |t| e_mu(params, Complex64::new(scale * t, 0.0)).re,
        LineWeight::GroundState(params),
        spec,
    )?;
    let closed = (p_prime * p_prime * x * x / 2.0).exp();
    let rel_diff = (integral.value - closed).abs() / closed;
    let tol = (50.0 * integral.err / closed).max(1e-8);
    Ok(CheckReport::new(
        "moment-identity",
        named(&[
            ("mu", params.mu()),
            ("p_prime", p_prime),
            ("x", x),
            ("integral", integral.value),
            ("closed_form", closed),
        ]),
        rel_diff,
        tol,
        0.0,
    ))
}

/// Unitarity witness: a holomorphic polynomial with orthonormal-basis
/// coefficients `a_n` at dilation 1 has squared norm
/// `sum lambda^{-n} |a_n|^2 / sum |a_n|^2` at dilation `lambda`. The value
/// is exactly 1 at `lambda = 1` and strictly below 1 for `lambda > 1`
/// whenever some `a_n, n >= 1` is nonzero, so the dilated transform is a
/// contraction but not unitary.
pub fn check_unitarity_witness(params: DeformParams, f: &ComplexPoly) -> Result<CheckReport> {
    if f.is_zero() {
        return Err(Error::Domain("unitarity witness needs f != 0".into()));
    }
    let base = params.with_lambda(1.0)?;
    let coeffs = poly_to_coeffs(base, Basis::Xi, f)?;
    let lambda = params.lambda();
    let mut weighted = 0.0;
    let mut plain = 0.0;
    for (n, a) in coeffs.coeffs().iter().enumerate() {
        let a2 = a.norm_sqr();
        weighted += lambda.powi(-(n as i32)) * a2;
        plain += a2;
    }
    let witness = weighted / plain;
    let degree = f.degree().unwrap_or(0) as f64;
    Ok(CheckReport::new(
        "unitarity-witness",
        named(&[
            ("mu", params.mu()),
            ("lambda", lambda),
            ("degree", degree),
            ("witness", witness),
        ]),
        witness,
        1.0,
        1e-13,
    ))
}

/// Everything the entropy inequalities share: both entropies, the squared
/// norm, the kernel-norm bound, and the transform image.
struct SmoothingPieces {
    s_line: QuadOutcome<f64>,
    s_plane: QuadOutcome<f64>,
    norm_sq: f64,
    norm_sq_err: f64,
    ln_a: f64,
    ln_a_err: f64,
    a_total: f64,
    bf: ComplexPoly,
}

fn smoothing_pieces(
    params: DeformParams,
    p: f64,
    q: f64,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<SmoothingPieces> {
    let base = params.with_lambda(1.0)?;
    let bf = apply_b_poly(base, f)?;
    let s_line = entropy(f, EntropySpace::Line(base), spec)?;
    let s_plane = entropy(&bf, EntropySpace::Plane(base), spec)?;
    let norm = lp_norm_line(base, f, 2.0, spec)?;
    let ht = hille_tamarkin_norm(params, p, q, spec)?;
    Ok(SmoothingPieces {
        s_line,
        s_plane,
        norm_sq: norm.value * norm.value,
        norm_sq_err: 2.0 * norm.value * norm.err,
        ln_a: ht.total.ln(),
        ln_a_err: ht.err / ht.total,
        a_total: ht.total,
        bf,
    })
}

/// Entropy form of the uncertainty principle at dilation 1:
/// `(1/p - 1/2) S(f) <= (1/q - 1/2) S(Bf) + log A |f|_2^2` for
/// `1 <= q < 2` and `p > 1 + q/2`, with `A` the Hille-Tamarkin bound.
pub fn check_hirschman(
    params: DeformParams,
    p: f64,
    q: f64,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<CheckReport> {
    if params.lambda() != 1.0 {
        return Err(Error::Domain(
            "the undilated entropy inequality needs lambda = 1".into(),
        ));
    }
    if !(1.0 <= q && q < 2.0) {
        return Err(Error::Domain(format!(
            "entropy inequality needs 1 <= q < 2, got {q}"
        )));
    }
    if !(p > 1.0 + q / 2.0) {
        return Err(Error::Domain(format!(
            "entropy inequality needs p > 1 + q/2, got p={p}, q={q}"
        )));
    }
    let pieces = smoothing_pieces(params, p, q, f, spec)?;
    let lhs = (1.0 / p - 0.5) * pieces.s_line.value;
    let rhs = (1.0 / q - 0.5) * pieces.s_plane.value + pieces.ln_a * pieces.norm_sq;
    let quad_err = (1.0 / p - 0.5).abs() * pieces.s_line.err
        + (1.0 / q - 0.5).abs() * pieces.s_plane.err
        + pieces.ln_a.abs() * pieces.norm_sq_err
        + pieces.ln_a_err * pieces.norm_sq;
    Ok(CheckReport::new(
        "hirschman",
        named(&[
            ("mu", params.mu()),
            ("lambda", 1.0),
            ("p", p),
            ("q", q),
            ("a", pieces.a_total),
            ("entropy_line", pieces.s_line.value),
            ("entropy_plane", pieces.s_plane.value),
        ]),
        lhs,
        rhs,
        quad_err,
    ))
}

/// Logarithmic Sobolev inequality at dilation `lambda >= 1`:
/// `(1/2 - 1/q) S(Bf) - (1/2 - 1/p) S(f) <= (1/q) E_lambda(Bf)
///  + (log A - (2 mu + 3)/(2q) log lambda) |f|_2^2`
/// for `1 <= q < 2 lambda`, `p > 1 + q/(2 lambda)`. Both entropies live in
/// the undilated spaces; the dilation enters through the energy term and
/// the kernel bound `A` at `lambda`. At `lambda = 1` the statement
/// degenerates term by term to the undilated entropy inequality.
pub fn check_log_sobolev(
    params: DeformParams,
    p: f64,
    q: f64,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<CheckReport> {
    let lambda = params.lambda();
    if lambda < 1.0 {
        return Err(Error::Domain(format!(
            "the logarithmic Sobolev inequality needs lambda >= 1, got {lambda}"
        )));
    }
    if !(1.0 <= q && q < 2.0 * lambda) {
        return Err(Error::Domain(format!(
            "needs 1 <= q < 2 lambda, got q={q}, lambda={lambda}"
        )));
    }
    if !(p > 1.0 + q / (2.0 * lambda)) {
        return Err(Error::Domain(format!(
            "needs p > 1 + q/(2 lambda), got p={p}, q={q}, lambda={lambda}"
        )));
    }
    let pieces = smoothing_pieces(params, p, q, f, spec)?;
    let energy = dilation_energy(params, &parity_split(&pieces.bf), spec)?;
    let mu = params.mu();
    let lhs = (0.5 - 1.0 / q) * pieces.s_plane.value - (0.5 - 1.0 / p) * pieces.s_line.value;
    let rhs = energy.value / q
        + (pieces.ln_a - (2.0 * mu + 3.0) / (2.0 * q) * lambda.ln()) * pieces.norm_sq;
    let quad_err = (0.5 - 1.0 / q).abs() * pieces.s_plane.err
        + (0.5 - 1.0 / p).abs() * pieces.s_line.err
        + energy.err / q
        + (pieces.ln_a - (2.0 * mu + 3.0) / (2.0 * q) * lambda.ln()).abs() * pieces.norm_sq_err
        + pieces.ln_a_err * pieces.norm_sq;
    Ok(CheckReport::new(
        "log-sobolev",
        named(&[
            ("mu", mu),
            ("lambda", lambda),
            ("p", p),
            ("q", q),
            ("a", pieces.a_total),
            ("energy", energy.value),
            ("entropy_line", pieces.s_line.value),
            ("entropy_plane", pieces.s_plane.value),
        ]),
        lhs,
        rhs,
        quad_err,
    ))
}

/// Interpolated Hausdorff-Young bound at dilation 1:
/// `|Bf|_{q_s} <= A^s |f|_{p_s}` with `p_s, q_s` the interpolated
/// exponents; at `s = 0` both sides are the 2-norm and the bound is an
/// equality.
pub fn check_hausdorff_young(
    params: DeformParams,
    p: f64,
    q: f64,
    s: f64,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<CheckReport> {
    if params.lambda() != 1.0 {
        return Err(Error::Domain(
            "the unweighted interpolation family lives at lambda = 1".into(),
        ));
    }
    if !(1.0 <= q && q < 2.0) || !(p > 1.0 + q / 2.0) {
        return Err(Error::Domain(format!(
            "needs 1 <= q < 2 and p > 1 + q/2, got p={p}, q={q}"
        )));
    }
    let p_s = interp_scale(p, s)?;
    let q_s = interp_scale(q, s)?;
    let bf = apply_b_poly(params, f)?;
    let lhs = lp_norm_plane(params, &parity_split(&bf), q_s, spec)?;
    let fnorm = lp_norm_line(params, f, p_s, spec)?;
    let ht = hille_tamarkin_norm(params, p, q, spec)?;
    let a_pow = ht.total.powf(s);
    let rhs = a_pow * fnorm.value;
    // At s = 0 the bound is the isometry equality, so the margin sits
    // directly on the plane quadrature's relative noise floor; budget for
    // it explicitly.
    let quad_err = 1e-10 * (lhs.value.abs() + rhs.abs())
        + lhs.err
        + a_pow * fnorm.err
        + if s > 0.0 {
            s * ht.total.powf(s - 1.0) * ht.err * fnorm.value
        } else {
            0.0
        };
    Ok(CheckReport::new(
        "hausdorff-young",
        named(&[
            ("mu", params.mu()),
            ("lambda", 1.0),
            ("p", p),
            ("q", q),
            ("s", s),
            ("p_s", p_s),
            ("q_s", q_s),
            ("a", ht.total),
        ]),
        lhs.value,
        rhs,
        quad_err,
    ))
}

/// Weighted Hausdorff-Young bound at dilation `lambda >= 1`:
/// `|Bf|_{L^{q_s}(nu^s)} <= A^s |f|_{p_s}` where `nu^s` is the
/// interpolated measure `kappa^{q_s} d nu` and `A` is the kernel bound at
/// `lambda`. The norm on the left is evaluated twice, with the weight
/// placed once in the measure and once on the integrand; the two routes
/// must agree to roundoff or the report is refused.
pub fn check_weighted_hausdorff_young(
    params: DeformParams,
    p: f64,
    q: f64,
    s: f64,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<CheckReport> {
    let lambda = params.lambda();
    if lambda < 1.0 {
        return Err(Error::Domain(format!(
            "the weighted family needs lambda >= 1, got {lambda}"
        )));
    }
    if !(1.0 <= q && q < 2.0 * lambda) || !(p > 1.0 + q / (2.0 * lambda)) {
        return Err(Error::Domain(format!(
            "needs 1 <= q < 2 lambda and p > 1 + q/(2 lambda), got p={p}, q={q}, lambda={lambda}"
        )));
    }
    let p_s = interp_scale(p, s)?;
    let q_s = interp_scale(q, s)?;
    let base = params.with_lambda(1.0)?;
    let bf = parity_split(&apply_b_poly(base, f)?);
    let mut as_measure = 0.0;
    let mut as_weight = 0.0;
    let mut lhs_err = 0.0;
    for parity in [Parity::Even, Parity::Odd] {
        let part = bf.get(parity);
        // weight in the measure: kappa is radial, so it rides the radial factor
        let via_measure = plane_integral(
            base,
            parity,
            spec,
            |u| {
                kappa(params, q, s, Complex64::new(u.sqrt(), 0.0), parity)
                    .map(|k| k.powf(q_s))
                    .unwrap_or(f64::NAN)
            },
            |z| part.eval(z).norm().powf(q_s),
        )?;
        // weight on the integrand
        let via_weight = plane_integral(
            base,
            parity,
            spec,
            |_| 1.0,
            |z| {
                let k = kappa(params, q, s, z, parity).unwrap_or(f64::NAN);
                (part.eval(z).norm() * k).powf(q_s)
            },
        )?;
        as_measure += via_measure.value;
        as_weight += via_weight.value;
        lhs_err += via_measure.err;
    }
    let scale = as_measure.max(as_weight).max(1e-300);
    if ((as_measure - as_weight) / scale).abs() > 1e-10 {
        return Err(Error::ToleranceNotMet {
            value: as_measure,
            achieved: (as_measure - as_weight).abs(),
            requested: 1e-10 * scale,
        });
    }
    let lhs = as_measure.powf(1.0 / q_s);
    let lhs_err = if as_measure > 0.0 {
        lhs * lhs_err / (as_measure * q_s)
    } else {
        0.0
    };
    let fnorm = lp_norm_line(base, f, p_s, spec)?;
    let ht = hille_tamarkin_norm(params, p, q, spec)?;
    let a_pow = ht.total.powf(s);
    let rhs = a_pow * fnorm.value;
    // same noise-floor allowance as the unweighted check: s = 0 is an
    // equality and the margin rides on the plane quadrature noise
    let quad_err = 1e-10 * (lhs.abs() + rhs.abs())
        + lhs_err
        + a_pow * fnorm.err
        + if s > 0.0 {
            s * ht.total.powf(s - 1.0) * ht.err * fnorm.value
        } else {
            0.0
        };
    Ok(CheckReport::new(
        "weighted-hausdorff-young",
        named(&[
            ("mu", params.mu()),
            ("lambda", lambda),
            ("p", p),
            ("q", q),
            ("s", s),
            ("p_s", p_s),
            ("q_s", q_s),
            ("a", ht.total),
            ("kappa_route_diff", (as_measure - as_weight).abs() / scale),
        ]),
        lhs,
        rhs,
        quad_err,
    ))
}

/// Admissible `(p, q)` sample for the smoothing inequality at `lambda = 1`:
/// every point satisfies `1 <= q < 2` and `p > 1 + q/2`, spread between the
/// near-boundary and deep-interior ends of the region.
pub const SMOOTHING_SAMPLE: [(f64, f64); 6] = [
    (4.0, 1.0),
    (3.0, 1.5),
    (2.5, 1.2),
    (4.0, 1.8),
    (2.2, 1.0),
    (5.0, 1.9),
];

/// Admissible `(p, q, lambda)` sample for the logarithmic Sobolev check:
/// every point satisfies `lambda >= 1`, `1 <= q < 2 lambda`, and
/// `p > 1 + q/(2 lambda)`. The `lambda = 1` rows overlap [`SMOOTHING_SAMPLE`]
/// so the two checks can be compared directly.
pub const LOG_SOBOLEV_SAMPLE: [(f64, f64, f64); 9] = [
    (4.0, 1.0, 1.0),
    (3.0, 1.5, 1.0),
    (2.2, 1.0, 1.0),
    (2.5, 1.2, 1.5),
    (2.0, 2.0, 1.5),
    (5.0, 1.9, 1.5),
    (4.0, 1.8, 2.0),
    (4.0, 3.0, 2.0),
    (2.0, 2.0, 2.0),
];

/// The test functions exercised by the verification batteries: constants,
/// low monomials, a complex-coefficient mix, and the degree-3 Hermite
/// eigenfunction of the deformed oscillator (which depends on `mu`).
pub fn default_function_family(params: DeformParams) -> Result<Vec<(String, ComplexPoly)>> {
    Ok(vec![
        ("1".into(), ComplexPoly::from_real(&[1.0])),
        ("t".into(), ComplexPoly::from_real(&[0.0, 1.0])),
        ("t^2".into(), ComplexPoly::from_real(&[0.0, 0.0, 1.0])),
        (
            "t+i*t^3".into(),
            ComplexPoly::new(vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 1.0),
            ]),
        ),
        ("zeta_3".into(), crate::transform::zeta_poly(params, 3)?),
    ])
}
