//! Deterministic adaptive quadrature.
//!
//! Panels use a 15-point Gauss-Legendre rule (nodes computed once by Newton
//! iteration, no tabulated constants). A panel's error is estimated by
//! comparing its value against the sum of its two halves; panels are bisected
//! until the local error share drops below the requested budget or the depth
//! cap is reached. Evaluation order is fixed (left before right), so results
//! are bit-for-bit reproducible. Nodes are interior, which keeps integrable
//! endpoint singularities out of the evaluation set.

use num_complex::Complex64;
use once_cell::sync::Lazy;

const GL_N: usize = 15;

/// Values that can be accumulated by the engine: reals, complex values, or
/// user-defined bundles (value plus auxiliary error channel).
pub trait QuadElem: Copy {
    fn zero() -> Self;
    fn add(self, rhs: Self) -> Self;
    fn sub(self, rhs: Self) -> Self;
    fn scale(self, s: f64) -> Self;
    /// Magnitude used for error estimates and relative-tolerance tests.
    fn magnitude(self) -> f64;
}

impl QuadElem for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadElem for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn sub(self, rhs: Self) -> Self {
        self - rhs
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn magnitude(self) -> f64 {
        self.re.abs() + self.im.abs()
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadOutcome<T> {
    pub value: T,
    /// Accumulated error estimate (conservative).
    pub err: f64,
    /// False when some panel hit the depth cap above its error budget.
    pub converged: bool,
    pub evals: usize,
}

struct GlRule {
    nodes: [f64; GL_N],
    weights: [f64; GL_N],
}

/// Legendre P_n(x) and its derivative by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

static GL15: Lazy<GlRule> = Lazy::new(|| {
    let mut nodes = [0.0; GL_N];
    let mut weights = [0.0; GL_N];
    for i in 0..GL_N {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (GL_N as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, dp) = legendre_pair(GL_N, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_pair(GL_N, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    GlRule { nodes, weights }
});

fn panel<T: QuadElem>(f: &mut impl FnMut(f64) -> T, a: f64, b: f64) -> T {
    let rule = &*GL15;
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = T::zero();
    for i in 0..GL_N {
        acc = acc.add(f(mid + half * rule.nodes[i]).scale(rule.weights[i]));
    }
    acc.scale(half)
}

struct Worker<'a, T, F: FnMut(f64) -> T> {
    f: &'a mut F,
    max_depth: usize,
    /// Per-panel relative acceptance: a panel whose bisection difference is
    /// below `rel_floor` times its own magnitude cannot be refined further
    /// in a meaningful way, because the difference is at the level of the
    /// integrand's own evaluation noise.
    rel_floor: f64,
    evals: usize,
    err: f64,
    converged: bool,
}

impl<'a, T: QuadElem, F: FnMut(f64) -> T> Worker<'a, T, F> {
    fn refine(&mut self, a: f64, b: f64, whole: T, tol: f64, depth: usize) -> T {
        let mid = 0.5 * (a + b);
        let left = panel(self.f, a, mid);
        let right = panel(self.f, mid, b);
        self.evals += 2 * GL_N;
        let better = left.add(right);
        let diff = whole.sub(better).magnitude();
        let noise = self.rel_floor * better.magnitude();
        if diff <= tol || diff <= noise || depth >= self.max_depth {
            if diff > tol && diff > noise {
                self.converged = false;
            }
            self.err += diff;
            return better;
        }
        let half_tol = 0.5 * tol;
        let l = self.refine(a, mid, left, half_tol, depth + 1);
        let r = self.refine(mid, b, right, half_tol, depth + 1);
        l.add(r)
    }
}

/// Integrate `f` over the union of `[breaks[i], breaks[i+1]]`.
///
/// The error budget is `max(abs_tol, rel_tol * |coarse estimate|)`, split
/// across subintervals proportionally to a first coarse pass. A panel is
/// also accepted once its bisection difference falls under `rel_tol` times
/// the panel's own value; splitting the tolerance per level would otherwise
/// demand more local accuracy than the integrand's evaluation noise allows.
pub fn integrate_breakpoints<T: QuadElem>(
    mut f: impl FnMut(f64) -> T,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_depth: usize,
) -> QuadOutcome<T> {
    assert!(breaks.len() >= 2, "need at least one interval");
    let mut coarse = T::zero();
    let mut panels = Vec::with_capacity(breaks.len() - 1);
    let mut evals = 0;
    for w in breaks.windows(2) {
        let p = panel(&mut f, w[0], w[1]);
        evals += GL_N;
        coarse = coarse.add(p);
        panels.push(p);
    }
    let budget = abs_tol.max(rel_tol * coarse.magnitude());
    let per_interval = budget / (breaks.len() - 1) as f64;

    let mut worker = Worker {
        f: &mut f,
        max_depth,
        rel_floor: rel_tol,
        evals,
        err: 0.0,
        converged: true,
    };
    let mut total = T::zero();
    for (i, w) in breaks.windows(2).enumerate() {
        let v = worker.refine(w[0], w[1], panels[i], per_interval, 0);
        total = total.add(v);
    }
    // The per-level share halving is only a work-distribution heuristic; the
    // contract is the global budget. A panel may trip max_depth against its
    // local share while the summed error still lands inside the budget.
    let achieved = worker.err;
    let converged =
        worker.converged || achieved <= abs_tol.max(rel_tol * total.magnitude());
    QuadOutcome {
        value: total,
        err: achieved,
        converged,
        evals: worker.evals,
    }
}

/// Integrate `f` over `[a, b]`.
pub fn integrate<T: QuadElem>(
    f: impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_depth: usize,
) -> QuadOutcome<T> {
    integrate_breakpoints(f, &[a, b], abs_tol, rel_tol, max_depth)
}
