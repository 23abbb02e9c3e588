//! The deformed Segal-Bargmann transform and its operator algebra.
//!
//! The transform sends a function on the line to a holomorphic function,
//! `(Bf)(z) = exp(-z^2/2) Integral e_mu(sqrt(2) t z) f(t) dg(t)`. On
//! polynomials it has an exact closed form, implemented here with
//! nonnegative rational-valued coefficient arithmetic so high-degree images
//! do not suffer cancellation; the quadrature form is kept as an independent
//! route for cross-checking. Alongside the transform live the dilation
//! `(T f)(z) = f(lambda^{1/2} z)`, the ground-state map, the Dunkl
//! derivative, ladder operators on coefficient vectors, and the energy
//! functionals used by the entropy inequalities.

use crate::measure::{
    integrate_plane, plane_integral, integrate_line, parity_split, LineWeight, Parity, ParityPair,
    QuadratureSpec,
};
use crate::poly::ComplexPoly;
use crate::quad::QuadOutcome;
use crate::special::{e_mu, gamma, gamma_mu, hermite_mu, macdonald_k};
use crate::{DeformParams, Error, Result};
use num_complex::Complex64;

/// `n + 2 mu` for odd `n`, `n` for even `n`: the step of the deformed
/// factorial and the eigenvalue ladder of the number operator.
fn step(mu: f64, n: u32) -> f64 {
    if n % 2 == 1 {
        n as f64 + 2.0 * mu
    } else {
        n as f64
    }
}

/// Transform kernel `exp(-z^2/2) e_mu(sqrt(2) t z)`.
pub fn kernel_b(params: DeformParams, z: Complex64, t: f64) -> Complex64 {
    (-0.5 * z * z).exp() * e_mu(params, std::f64::consts::SQRT_2 * t * z)
}

/// Even or odd part in `z` of the transform kernel.
pub fn kernel_b_parity(params: DeformParams, z: Complex64, t: f64, parity: Parity) -> Complex64 {
    let w = std::f64::consts::SQRT_2 * t * z;
    let half = 0.5 * (-0.5 * z * z).exp();
    half * (e_mu(params, w) + parity.sign() * e_mu(params, -w))
}

/// Closed-form image of the monomial `t^n` under the transform:
/// a polynomial with coefficient of `z^{n-2j}` equal to
/// `gamma_mu(n) / (j! gamma_mu(n-2j) 2^{(n+2j)/2})`.
pub fn monomial_image(params: DeformParams, n: u32) -> Result<ComplexPoly> {
    let mu = params.mu();
    // guard the same overflow boundary as gamma_mu itself
    gamma_mu(params, n)?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize + 1];
    let mut c = 0.5f64.powf(n as f64 / 2.0);
    coeffs[n as usize] = Complex64::new(c, 0.0);
    for j in 1..=(n / 2) {
        let k = n - 2 * j;
        c *= step(mu, k + 1) * step(mu, k + 2) / (2.0 * j as f64);
        coeffs[k as usize] = Complex64::new(c, 0.0);
    }
    Ok(ComplexPoly::new(coeffs))
}

/// Exact polynomial image under the transform; linear and degree preserving.
pub fn apply_b_poly(params: DeformParams, f: &ComplexPoly) -> Result<ComplexPoly> {
    let mut acc = ComplexPoly::zero();
    for (n, &c) in f.coeffs().iter().enumerate() {
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        acc = acc.add(&monomial_image(params, n as u32)?.scale(c));
    }
    Ok(acc)
}

/// Transform of a polynomial at one point, by quadrature against the
/// ground-state measure. Kept independent of the closed form on purpose.
pub fn apply_b_quadrature(
    params: DeformParams,
    f: &ComplexPoly,
    z: Complex64,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<Complex64>> {
    integrate_line(
        |t| kernel_b(params, z, t) * f.eval_real(t),
        LineWeight::GroundState(params),
        spec,
    )
}

/// Ground-state wave function `Gamma(mu+1/2)^{-1/2} exp(-t^2/2)`; its square
/// times `|t|^{2mu} dt` is the ground-state measure.
pub fn ground_state_wave(params: DeformParams, t: f64) -> f64 {
    (-0.5 * t * t).exp() / gamma(params.mu() + 0.5).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GsDirection {
    /// Divide by the ground-state wave: unitary from `L^2(|t|^{2mu} dt)`
    /// onto `L^2(dg)`.
    ToGroundState,
    /// Multiply by the ground-state wave: the inverse map.
    FromGroundState,
}

/// The ground-state multiplication map as a function transformer.
pub fn ground_state_map<'a>(
    params: DeformParams,
    f: impl Fn(f64) -> Complex64 + 'a,
    direction: GsDirection,
) -> impl Fn(f64) -> Complex64 + 'a {
    move |t| match direction {
        GsDirection::ToGroundState => f(t) / ground_state_wave(params, t),
        GsDirection::FromGroundState => f(t) * ground_state_wave(params, t),
    }
}

/// Dilation `f(z) -> f(lambda^{1/2} z)`: coefficient `a_n -> lambda^{n/2} a_n`.
pub fn dilation_t(lambda: f64, f: &ComplexPoly) -> ComplexPoly {
    let root = lambda.sqrt();
    let mut scale = 1.0;
    let coeffs = f
        .coeffs()
        .iter()
        .map(|&c| {
            let out = c * scale;
            scale *= root;
            out
        })
        .collect();
    ComplexPoly::new(coeffs)
}

/// Dunkl derivative `f'(t) + mu (f(t) - f(-t))/t`; on monomials
/// `t^n -> (n + 2 mu theta(n)) t^{n-1}` with theta the odd indicator.
pub fn dunkl_d(params: DeformParams, f: &ComplexPoly) -> ComplexPoly {
    let mu = params.mu();
    if f.coeffs().len() <= 1 {
        return ComplexPoly::zero();
    }
    let coeffs = f.coeffs()[1..]
        .iter()
        .enumerate()
        .map(|(m, &c)| c * step(mu, m as u32 + 1))
        .collect();
    ComplexPoly::new(coeffs)
}

/// Coefficient basis tag. The deformed Hermite vectors `zeta_n` span the
/// line space `L^2(dg)`; their transform images `xi_n = gamma_mu(n)^{-1/2}
/// z^n` span the holomorphic space at `lambda = 1`; the dilated vectors
/// `chi_n = gamma_mu(n)^{-1/2} lambda^{n/2} z^n` span it at general
/// `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Zeta,
    Xi,
    Chi,
}

/// A finite coefficient vector in one of the orthonormal bases; the squared
/// norm in the tagged space is the plain coefficient sum of squares.
#[derive(Debug, Clone)]
pub struct FockCoeffs {
    params: DeformParams,
    basis: Basis,
    coeffs: Vec<Complex64>,
}

impl FockCoeffs {
    pub fn new(params: DeformParams, basis: Basis, coeffs: Vec<Complex64>) -> Self {
        Self {
            params,
            basis,
            coeffs,
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn params(&self) -> DeformParams {
        self.params
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// The `n`-th deformed Hermite basis vector of the line space, as a
/// polynomial: `2^{-n/2} (n!)^{-1} gamma_mu(n)^{1/2} H_n`.
pub fn zeta_poly(params: DeformParams, n: u32) -> Result<ComplexPoly> {
    let g = gamma_mu(params, n)?;
    let mut n_fact = 1.0f64;
    for m in 1..=n {
        n_fact *= m as f64;
    }
    let scale = 0.5f64.powf(n as f64 / 2.0) * g.sqrt() / n_fact;
    Ok(hermite_mu(params, n).scale(Complex64::new(scale, 0.0)))
}

/// Monomial basis vector of the holomorphic space: `gamma_mu(n)^{-1/2} z^n`
/// at `lambda = 1`, with the extra factor `lambda^{n/2}` under `Chi`.
pub fn holomorphic_basis_poly(params: DeformParams, basis: Basis, n: u32) -> Result<ComplexPoly> {
    let g = gamma_mu(params, n)?;
    let scale = match basis {
        Basis::Xi => g.powf(-0.5),
        Basis::Chi => g.powf(-0.5) * params.lambda().powf(n as f64 / 2.0),
        Basis::Zeta => return zeta_poly(params, n),
    };
    Ok(ComplexPoly::monomial(n as usize).scale(Complex64::new(scale, 0.0)))
}

/// Expand a polynomial in the tagged basis. Exact linear algebra: the bases
/// are triangular in the monomials, so expansion runs by eliminating leading
/// coefficients from the top degree down.
pub fn poly_to_coeffs(params: DeformParams, basis: Basis, f: &ComplexPoly) -> Result<FockCoeffs> {
    let deg = match f.degree() {
        None => return Ok(FockCoeffs::new(params, basis, Vec::new())),
        Some(d) => d,
    };
    match basis {
        Basis::Xi | Basis::Chi => {
            let mut coeffs = Vec::with_capacity(deg + 1);
            for n in 0..=deg {
                let g = gamma_mu(params, n as u32)?;
                let unit = match basis {
                    Basis::Xi => g.powf(-0.5),
                    Basis::Chi => g.powf(-0.5) * params.lambda().powf(n as f64 / 2.0),
                    Basis::Zeta => unreachable!(),
                };
                coeffs.push(f.coeff(n) / unit);
            }
            Ok(FockCoeffs::new(params, basis, coeffs))
        }
        Basis::Zeta => {
            let mut residue = f.clone();
            let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
            for n in (0..=deg).rev() {
                let lead = residue.coeff(n);
                if lead == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let zeta = zeta_poly(params, n as u32)?;
                let a = lead / zeta.coeff(n);
                coeffs[n] = a;
                residue = residue.add(&zeta.scale(-a));
            }
            Ok(FockCoeffs::new(params, basis, coeffs))
        }
    }
}

/// Rebuild the polynomial from its tagged coefficients.
pub fn coeffs_to_poly(c: &FockCoeffs) -> Result<ComplexPoly> {
    let mut acc = ComplexPoly::zero();
    for (n, &a) in c.coeffs().iter().enumerate() {
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let basis_poly = holomorphic_basis_poly(c.params(), c.basis(), n as u32)?;
        acc = acc.add(&basis_poly.scale(a));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderOp {
    Create,
    Annihilate,
    /// `Create` after `Annihilate`: diagonal with eigenvalue
    /// `n + 2 mu theta(n)`.
    Number,
}

/// Apply a ladder operator to a coefficient vector (zeta or xi tagged; the
/// two spaces carry the same ladder action).
pub fn ladder(c: &FockCoeffs, which: LadderOp) -> Result<FockCoeffs> {
    if c.basis() == Basis::Chi {
        return Err(Error::Domain(
            "ladder operators act on the zeta or xi basis".into(),
        ));
    }
    let mu = c.params().mu();
    let a = c.coeffs();
    let out = match which {
        LadderOp::Create => {
            let mut out = vec![Complex64::new(0.0, 0.0); a.len() + 1];
            for (n, &v) in a.iter().enumerate() {
                out[n + 1] = v * step(mu, n as u32 + 1).sqrt();
            }
            out
        }
        LadderOp::Annihilate => {
            if a.len() <= 1 {
                Vec::new()
            } else {
                let mut out = vec![Complex64::new(0.0, 0.0); a.len() - 1];
                for (n, &v) in a.iter().enumerate().skip(1) {
                    out[n - 1] = v * step(mu, n as u32).sqrt();
                }
                out
            }
        }
        LadderOp::Number => a
            .iter()
            .enumerate()
            .map(|(n, &v)| v * step(mu, n as u32))
            .collect(),
    };
    Ok(FockCoeffs::new(c.params(), c.basis(), out))
}

/// `Sum (n + 2 mu theta(n)) |a_n|^2`: the quadratic form of the number
/// operator. At `mu = 0` it equals half the squared `L^2(dg)` norm of the
/// derivative.
pub fn dirichlet_energy(c: &FockCoeffs) -> Result<f64> {
    if c.basis() == Basis::Chi {
        return Err(Error::Domain(
            "the number form acts on the zeta or xi basis".into(),
        ));
    }
    let mu = c.params().mu();
    Ok(c.coeffs()
        .iter()
        .enumerate()
        .map(|(n, v)| step(mu, n as u32) * v.norm_sqr())
        .sum())
}

/// Inner product of the holomorphic space: even parts paired on the even
/// channel plus odd parts on the odd channel, under the plane measure with
/// the dilation carried by `params`.
pub fn bargmann_inner(
    params: DeformParams,
    f: &ComplexPoly,
    g: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<Complex64>> {
    let fp = parity_split(f);
    let gp = parity_split(g);
    integrate_plane(
        params,
        spec,
        |z| fp.even.eval(z) * gp.even.eval(z).conj(),
        |z| fp.odd.eval(z) * gp.odd.eval(z).conj(),
    )
}

/// Squared norm in the holomorphic space, by quadrature.
pub fn bargmann_norm_sq(
    params: DeformParams,
    f: &ComplexPoly,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<f64>> {
    let out = bargmann_inner(params, f, f, spec)?;
    Ok(QuadOutcome {
        value: out.value.re,
        err: out.err,
        converged: out.converged,
        evals: out.evals,
    })
}

/// Second-moment energy `Integral |f_e|^2 |z|^2 dnu_e + Integral |f_o|^2
/// |z|^2 dnu_o`, always against the undilated (`lambda = 1`) measures.
pub fn energy_e_mu(
    params: DeformParams,
    f: &ParityPair<ComplexPoly>,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<f64>> {
    let base = params.with_lambda(1.0)?;
    let even = plane_integral(base, Parity::Even, spec, |s| s, |z| {
        f.even.eval(z).norm_sqr()
    })?;
    let odd = plane_integral(base, Parity::Odd, spec, |s| s, |z| f.odd.eval(z).norm_sqr())?;
    Ok(QuadOutcome {
        value: even.value + odd.value,
        err: even.err + odd.err,
        converged: true,
        evals: even.evals + odd.evals,
    })
}

/// Log-ratio of Macdonald factors entering the dilation energy; switches to
/// the large-argument form `(lambda-1)s + log(lambda)/2` once the direct
/// values underflow.
fn dilation_log_ratio(order: f64, lambda: f64, s: f64) -> Result<f64> {
    let num = macdonald_k(order, s)?;
    let den = macdonald_k(order, lambda * s)?;
    if num > 0.0 && den > 0.0 {
        Ok((num / den).ln())
    } else {
        Ok((lambda - 1.0) * s + 0.5 * lambda.ln())
    }
}

/// Dilation energy: the integral of `|f|^2 log(K(|z|^2)/K(lambda |z|^2))`
/// against the undilated parity measures, with the Macdonald order of each
/// channel. Nonnegative for `lambda >= 1` and identically zero at
/// `lambda = 1`.
pub fn dilation_energy(
    params: DeformParams,
    f: &ParityPair<ComplexPoly>,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<f64>> {
    let lambda = params.lambda();
    if lambda < 1.0 {
        return Err(Error::Domain(format!(
            "dilation energy requires lambda >= 1, got {lambda}"
        )));
    }
    if lambda == 1.0 {
        return Ok(QuadOutcome {
            value: 0.0,
            err: 0.0,
            converged: true,
            evals: 0,
        });
    }
    let base = params.with_lambda(1.0)?;
    let mut failure: Option<Error> = None;
    let mut total = 0.0;
    let mut err = 0.0;
    let mut evals = 0;
    for parity in [Parity::Even, Parity::Odd] {
        let order = parity.macdonald_order(params.mu());
        let part = plane_integral(
            base,
            parity,
            spec,
            |s| match dilation_log_ratio(order, lambda, s) {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e);
                    0.0
                }
            },
            |z| f.get(parity).eval(z).norm_sqr(),
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        total += part.value;
        err += part.err;
        evals += part.evals;
    }
    Ok(QuadOutcome {
        value: total,
        err,
        converged: true,
        evals,
    })
}

/// Remainder of the dilation energy after removing its explicit part:
/// `dilation_energy - log(sqrt(lambda)) |f|^2 - (lambda-1) energy`. Zero for
/// `mu = 0`; degree-2 homogeneous in `f` like every term.
pub fn rho_remainder(
    params: DeformParams,
    f: &ParityPair<ComplexPoly>,
    spec: &QuadratureSpec,
) -> Result<QuadOutcome<f64>> {
    let lambda = params.lambda();
    let joined = f.even.add(&f.odd);
    let de = dilation_energy(params, f, spec)?;
    let norm = bargmann_norm_sq(params.with_lambda(1.0)?, &joined, spec)?;
    let em = energy_e_mu(params, f, spec)?;
    Ok(QuadOutcome {
        value: de.value - 0.5 * lambda.ln() * norm.value - (lambda - 1.0) * em.value,
        err: de.err + 0.5 * lambda.ln().abs() * norm.err + (lambda - 1.0).abs() * em.err,
        converged: true,
        evals: de.evals + norm.evals + em.evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(mu: f64, lambda: f64) -> DeformParams {
        DeformParams::new(mu, lambda).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kernel_examples() {
        let z = c(0.7, -0.3);
        let k = kernel_b(p(1.2, 1.0), z, 0.0);
        assert!((k - (-0.5 * z * z).exp()).norm() < 1e-15);
        // undeformed kernel is a pure exponential
        let t = 1.3;
        let k0 = kernel_b(p(0.0, 1.0), z, t);
        let want = (-0.5 * z * z + std::f64::consts::SQRT_2 * t * z).exp();
        assert!((k0 - want).norm() < 1e-13 * want.norm());
        // parity variants recombine to the kernel
        let params = p(0.6, 1.0);
        let sum = kernel_b_parity(params, z, t, Parity::Even)
            + kernel_b_parity(params, z, t, Parity::Odd);
        assert!((sum - kernel_b(params, z, t)).norm() < 1e-13);
    }

    #[test]
    fn monomial_images_low_degree() {
        let params = p(0.8, 1.0);
        let b0 = monomial_image(params, 0).unwrap();
        assert_eq!(b0.coeffs(), &[c(1.0, 0.0)]);
        let b1 = monomial_image(params, 1).unwrap();
        assert!((b1.coeff(1).re - 1.0 / 2.0f64.sqrt()).abs() < 1e-15);
        assert_eq!(b1.coeff(0), c(0.0, 0.0));
        let b2 = monomial_image(params, 2).unwrap();
        assert!((b2.coeff(2).re - 0.5).abs() < 1e-15);
        assert!((b2.coeff(0).re - (1.0 + 2.0 * 0.8) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn poly_image_is_parity_preserving() {
        let params = p(1.0, 1.0);
        let even_in = ComplexPoly::from_real(&[1.0, 0.0, -2.0, 0.0, 0.5]);
        let img = apply_b_poly(params, &even_in).unwrap();
        assert!(img.odd_part().is_zero());
        let odd_in = ComplexPoly::from_real(&[0.0, 1.0, 0.0, 3.0]);
        let img = apply_b_poly(params, &odd_in).unwrap();
        assert!(img.even_part().is_zero());
    }

    #[test]
    fn zeta_maps_to_xi() {
        for &mu in &[0.0, 0.5, 1.0, 2.5] {
            let params = p(mu, 1.0);
            for n in 0..=8u32 {
                let img = apply_b_poly(params, &zeta_poly(params, n).unwrap()).unwrap();
                let want = holomorphic_basis_poly(params, Basis::Xi, n).unwrap();
                for m in 0..=n as usize {
                    let d = (img.coeff(m) - want.coeff(m)).norm();
                    assert!(d < 1e-12, "mu={mu} n={n} m={m} diff={d:.2e}");
                }
            }
        }
    }

    #[test]
    fn quadrature_route_matches_closed_form() {
        let params = p(0.5, 1.0);
        let f = ComplexPoly::from_real(&[0.3, -1.0, 0.0, 2.0]);
        let img = apply_b_poly(params, &f).unwrap();
        let spec = QuadratureSpec::default();
        for &z in &[c(0.4, 0.2), c(-1.1, 0.9), c(0.0, -1.5)] {
            let q = apply_b_quadrature(params, &f, z, &spec).unwrap();
            assert!((q.value - img.eval(z)).norm() < 1e-9);
        }
    }

    #[test]
    fn ground_state_map_round_trip() {
        let params = p(0.7, 1.0);
        let f = |t: f64| c(t * t - 0.5, 0.3 * t);
        let there = ground_state_map(params, f, GsDirection::FromGroundState);
        let back = ground_state_map(params, there, GsDirection::ToGroundState);
        for &t in &[0.0, 0.5, -2.0] {
            assert!((back(t) - f(t)).norm() < 1e-14);
        }
        // the wave itself maps to the constant 1
        let one = ground_state_map(
            params,
            move |t| c(ground_state_wave(params, t), 0.0),
            GsDirection::ToGroundState,
        );
        assert!((one(1.7) - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn dilation_rescales_coefficients() {
        let f = ComplexPoly::from_real(&[1.0, 2.0, 3.0]);
        let id = dilation_t(1.0, &f);
        assert_eq!(id.coeffs(), f.coeffs());
        let d = dilation_t(4.0, &f);
        assert_eq!(d.coeff(1).re, 4.0);
        assert_eq!(d.coeff(2).re, 12.0);
        // T maps the xi basis vector to the chi basis vector
        let params = p(0.9, 2.5);
        let xi3 = holomorphic_basis_poly(params, Basis::Xi, 3).unwrap();
        let chi3 = holomorphic_basis_poly(params, Basis::Chi, 3).unwrap();
        let mapped = dilation_t(params.lambda(), &xi3);
        assert!((mapped.coeff(3) - chi3.coeff(3)).norm() < 1e-15);
    }

    #[test]
    fn dunkl_on_monomials() {
        let params = p(1.1, 1.0);
        assert!(dunkl_d(params, &ComplexPoly::one()).is_zero());
        let t = ComplexPoly::monomial(1);
        let d = dunkl_d(params, &t);
        assert!((d.coeff(0).re - (1.0 + 2.2)).abs() < 1e-15);
        let t2 = ComplexPoly::monomial(2);
        let d2 = dunkl_d(params, &t2);
        assert_eq!(d2.coeff(1).re, 2.0);
        // product-free definition check: f' + mu (f(t)-f(-t))/t at a point
        let f = ComplexPoly::from_real(&[0.0, 1.0, 0.0, 2.0]);
        let df = dunkl_d(params, &f);
        let t0 = 0.83;
        let direct = f.derivative().eval_real(t0)
            + params.mu() * (f.eval_real(t0) - f.eval_real(-t0)) / t0;
        assert!((df.eval_real(t0) - direct).norm() < 1e-13);
    }

    #[test]
    fn ladder_and_number() {
        let params = p(0.75, 1.0);
        let e1 = FockCoeffs::new(params, Basis::Xi, vec![c(0.0, 0.0), c(1.0, 0.0)]);
        let n1 = ladder(&e1, LadderOp::Number).unwrap();
        assert!((n1.coeffs()[1].re - 2.5).abs() < 1e-15);
        let vac = FockCoeffs::new(params, Basis::Xi, vec![c(1.0, 0.0)]);
        assert_eq!(ladder(&vac, LadderOp::Number).unwrap().coeffs()[0], c(0.0, 0.0));
        let e2 = FockCoeffs::new(
            params,
            Basis::Xi,
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        );
        assert!((ladder(&e2, LadderOp::Number).unwrap().coeffs()[2].re - 2.0).abs() < 1e-15);
        // adjointness in exact coefficient arithmetic
        let u = FockCoeffs::new(params, Basis::Xi, vec![c(0.2, 0.1), c(-1.0, 0.4), c(0.5, 0.0)]);
        let v = FockCoeffs::new(
            params,
            Basis::Xi,
            vec![c(1.0, -0.3), c(0.0, 0.7), c(0.2, 0.2), c(-0.4, 0.0)],
        );
        let au = ladder(&u, LadderOp::Create).unwrap();
        let av = ladder(&v, LadderOp::Annihilate).unwrap();
        let lhs: Complex64 = au
            .coeffs()
            .iter()
            .zip(v.coeffs())
            .map(|(x, y)| x * y.conj())
            .sum();
        let rhs: Complex64 = u
            .coeffs()
            .iter()
            .zip(av.coeffs())
            .map(|(x, y)| x * y.conj())
            .sum();
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn number_is_create_after_annihilate() {
        let params = p(1.4, 1.0);
        let u = FockCoeffs::new(
            params,
            Basis::Zeta,
            vec![c(0.3, 0.0), c(1.0, -0.2), c(0.0, 0.5), c(0.7, 0.7)],
        );
        let ca = ladder(&ladder(&u, LadderOp::Annihilate).unwrap(), LadderOp::Create).unwrap();
        let num = ladder(&u, LadderOp::Number).unwrap();
        for n in 1..u.coeffs().len() {
            assert!((ca.coeffs()[n] - num.coeffs()[n]).norm() < 1e-14);
        }
    }

    #[test]
    fn dirichlet_energy_examples() {
        let params = p(1.0, 1.0);
        let vac = FockCoeffs::new(params, Basis::Zeta, vec![c(1.0, 0.0)]);
        assert_eq!(dirichlet_energy(&vac).unwrap(), 0.0);
        let e1 = FockCoeffs::new(params, Basis::Zeta, vec![c(0.0, 0.0), c(1.0, 0.0)]);
        assert!((dirichlet_energy(&e1).unwrap() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn zeta_expansion_round_trip() {
        let params = p(0.65, 1.0);
        let f = ComplexPoly::from_real(&[1.0, -0.5, 2.0, 0.0, 0.25, 1.5]);
        let coeffs = poly_to_coeffs(params, Basis::Zeta, &f).unwrap();
        let back = coeffs_to_poly(&coeffs).unwrap();
        for n in 0..=5 {
            assert!((back.coeff(n) - f.coeff(n)).norm() < 1e-12);
        }
        // t = sqrt((1+2mu)/2) zeta_1
        let t = ComplexPoly::monomial(1);
        let a = poly_to_coeffs(params, Basis::Zeta, &t).unwrap();
        let want = ((1.0 + 2.0 * 0.65) / 2.0f64).sqrt();
        assert!((a.coeffs()[1].re - want).abs() < 1e-14);
    }

    #[test]
    fn energy_examples_at_mu_zero() {
        let params = p(0.0, 1.0);
        let spec = QuadratureSpec::default();
        let one = parity_split(&ComplexPoly::one());
        let e = energy_e_mu(params, &one, &spec).unwrap();
        assert!((e.value - 1.0).abs() < 1e-9);
        let xi1 = parity_split(&holomorphic_basis_poly(params, Basis::Xi, 1).unwrap());
        let e = energy_e_mu(params, &xi1, &spec).unwrap();
        assert!((e.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn dilation_energy_closed_forms_at_mu_zero() {
        let spec = QuadratureSpec::default();
        let params = p(0.0, 2.0);
        let one = parity_split(&ComplexPoly::one());
        let e = dilation_energy(params, &one, &spec).unwrap();
        let want = 0.5 * 2.0f64.ln() + 1.0;
        assert!((e.value - want).abs() < 1e-8, "got {} want {want}", e.value);
        let xi1 = parity_split(&holomorphic_basis_poly(params, Basis::Xi, 1).unwrap());
        let e = dilation_energy(params, &xi1, &spec).unwrap();
        assert!((e.value - (want + 1.0)).abs() < 1e-8);
        // lambda = 1 gives exactly zero
        let z = dilation_energy(p(1.3, 1.0), &one, &spec).unwrap();
        assert_eq!(z.value, 0.0);
        // lambda < 1 is out of range
        assert!(matches!(
            dilation_energy(p(1.3, 0.5), &one, &spec),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rho_vanishes_at_mu_zero_and_scales_quadratically() {
        let spec = QuadratureSpec::default();
        let f = parity_split(&ComplexPoly::from_real(&[1.0, 0.5, -0.3]));
        let r0 = rho_remainder(p(0.0, 1.8), &f, &spec).unwrap();
        assert!(r0.value.abs() < 1e-8, "rho at mu=0: {}", r0.value);
        let params = p(1.0, 2.0);
        let r1 = rho_remainder(params, &f, &spec).unwrap();
        let doubled = parity_split(&ComplexPoly::from_real(&[2.0, 1.0, -0.6]));
        let r2 = rho_remainder(params, &doubled, &spec).unwrap();
        assert!((r2.value - 4.0 * r1.value).abs() < 1e-7 * r1.value.abs().max(1.0));
    }
}
