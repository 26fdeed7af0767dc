//! Adaptive Gauss-Legendre quadrature for complex integrands, and
//! polynomial (Neville) extrapolation to zero step.
//!
//! Each interval is integrated with a 16-point rule on the whole and on both
//! halves; the difference bounds the error of the coarse estimate and the
//! refined value is kept. Intervals are refined largest-error first.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

const RULE_POINTS: usize = 16;

struct Rule {
    nodes: [f64; RULE_POINTS],
    weights: [f64; RULE_POINTS],
}

fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let (nodes, weights) = gauss_legendre(RULE_POINTS);
        let mut r = Rule {
            nodes: [0.0; RULE_POINTS],
            weights: [0.0; RULE_POINTS],
        };
        r.nodes.copy_from_slice(&nodes);
        r.weights.copy_from_slice(&weights);
        r
    })
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn apply_rule<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let r = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in r.nodes.iter().zip(&r.weights) {
        acc += f(mid + half * x) * *w;
    }
    acc * half
}

#[derive(Debug, Clone, Copy)]
pub struct AdaptiveOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            max_intervals: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_err: f64,
    pub intervals: usize,
}

struct Piece {
    a: f64,
    b: f64,
    left: Complex64,
    right: Complex64,
    err: f64,
}

impl Piece {
    fn new<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Self {
        let m = 0.5 * (a + b);
        let whole = apply_rule(f, a, b);
        let left = apply_rule(f, a, m);
        let right = apply_rule(f, m, b);
        let err = (left + right - whole).norm();
        Piece {
            a,
            b,
            left,
            right,
            err,
        }
    }

    fn value(&self) -> Complex64 {
        self.left + self.right
    }

    /// Stand-in for `int |f|` over the piece.
    fn mass(&self) -> f64 {
        self.left.norm() + self.right.norm()
    }
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// A piece whose error does not shrink under bisection and is already
/// below this fraction of its own magnitude is taken to be limited by
/// rounding in the integrand and is no longer refined.
pub const ROUNDOFF_REL: f64 = 1e-10;

/// Adaptive integral of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    opts: &AdaptiveOptions,
) -> Result<QuadResult> {
    integrate_panels(f, a, b, 1, opts)
}

/// Like [`integrate`] but seeded with `panels` equal sub-intervals, which
/// suits integrands with many oscillations.
///
/// If every remaining piece is round-off limited (see [`ROUNDOFF_REL`]) the
/// result is returned even when `abs_err` exceeds the requested tolerance.
pub fn integrate_panels<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    panels: usize,
    opts: &AdaptiveOptions,
) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "integration limits must be finite ({a}, {b})"
        )));
    }
    if a == b {
        return Ok(QuadResult {
            value: Complex64::new(0.0, 0.0),
            abs_err: 0.0,
            intervals: 0,
        });
    }
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut heap = BinaryHeap::with_capacity(panels * 2);
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut frozen = Vec::new();
    for i in 0..panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == panels { b } else { lo + width };
        let p = Piece::new(&f, lo, hi);
        total += p.value();
        err += p.err;
        heap.push(p);
    }
    while err > opts.abs_tol.max(opts.rel_tol * total.norm()) {
        if heap.len() + frozen.len() >= opts.max_intervals {
            return Err(Error::NonConvergence(format!(
                "adaptive quadrature on [{a}, {b}] hit {} intervals with error estimate {err:e} (value {total})",
                heap.len() + frozen.len()
            )));
        }
        let Some(worst) = heap.pop() else {
            break;
        };
        if !worst.err.is_finite() {
            return Err(Error::NonConvergence(format!(
                "non-finite integrand near [{}, {}]",
                worst.a, worst.b
            )));
        }
        let m = 0.5 * (worst.a + worst.b);
        let l = Piece::new(&f, worst.a, m);
        let r = Piece::new(&f, m, worst.b);
        total += l.value() + r.value() - worst.value();
        err += l.err + r.err - worst.err;
        let stalled = l.err + r.err >= 0.5 * worst.err && worst.err <= ROUNDOFF_REL * worst.mass();
        for p in [l, r] {
            if stalled {
                frozen.push(p);
            } else {
                heap.push(p);
            }
        }
    }
    // resum to shed the drift of the running updates
    let pieces = || heap.iter().chain(&frozen);
    let value = pieces().map(Piece::value).sum();
    let abs_err = pieces().map(|p| p.err).sum();
    Ok(QuadResult {
        value,
        abs_err,
        intervals: heap.len() + frozen.len(),
    })
}

/// Real-valued convenience wrapper.
pub fn integrate_real<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &AdaptiveOptions,
) -> Result<f64> {
    integrate(|x| Complex64::new(f(x), 0.0), a, b, opts).map(|r| r.value.re)
}

#[derive(Debug, Clone)]
pub struct Extrapolation {
    pub value: Complex64,
    /// Successive extrapolants using the first 1, 2, ... samples.
    pub estimates: Vec<Complex64>,
}

impl Extrapolation {
    /// `|T_n - T_{n-1}|` for the last two extrapolants.
    pub fn last_change(&self) -> f64 {
        match self.estimates.as_slice() {
            [.., a, b] => (b - a).norm(),
            _ => f64::INFINITY,
        }
    }

    /// Whether successive changes shrink monotonically, i.e. the sequence
    /// of extrapolants behaves like a Cauchy sequence.
    pub fn is_contracting(&self) -> bool {
        let diffs: Vec<f64> = self
            .estimates
            .windows(2)
            .map(|w| (w[1] - w[0]).norm())
            .collect();
        diffs.windows(2).all(|d| d[1] <= d[0])
    }
}

/// Neville extrapolation of samples `values[i] = F(steps[i])` to step zero.
pub fn extrapolate_to_zero(steps: &[f64], values: &[Complex64]) -> Result<Extrapolation> {
    if steps.len() != values.len() || steps.len() < 2 {
        return Err(Error::InvalidConfig(
            "extrapolation needs at least two matching samples".into(),
        ));
    }
    let n = steps.len();
    let mut table: Vec<Complex64> = values.to_vec();
    let mut estimates = vec![values[0]];
    // after pass j, table[i] holds the interpolant through samples i-j..=i at 0
    for j in 1..n {
        for i in (j..n).rev() {
            let (hi, hj) = (steps[i], steps[i - j]);
            table[i] = (table[i] * hj - table[i - 1] * hi) / (hj - hi);
        }
        estimates.push(table[j]);
    }
    // estimates[j] currently uses samples 0..=j
    Ok(Extrapolation {
        value: *estimates.last().expect("n >= 2"),
        estimates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(16);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let i30: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(30)).sum();
        assert!((i30 - 2.0 / 31.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_smooth_and_peaked() {
        let opts = AdaptiveOptions::default();
        let v = integrate_real(f64::exp, 0.0, 1.0, &opts).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-14);
        // sharp Lorentzian, exact value 2 atan(1/eps)
        let eps = 1e-4;
        let v = integrate_real(|x| eps / (x * x + eps * eps), -1.0, 1.0, &opts).unwrap();
        assert!((v - 2.0 * (1.0 / eps).atan()).abs() < 1e-10);
    }

    #[test]
    fn oscillatory_panels() {
        let opts = AdaptiveOptions::default();
        let r = integrate_panels(
            |x| Complex64::new(0.0, 50.0 * x).exp(),
            0.0,
            10.0,
            100,
            &opts,
        )
        .unwrap();
        let exact = (Complex64::new(0.0, 500.0).exp() - 1.0) / Complex64::new(0.0, 50.0);
        assert!((r.value - exact).norm() < 1e-12);
    }

    #[test]
    fn cancelling_integral_stops_at_roundoff() {
        // int_0^{2 pi n} x sin x dx = -2 pi n, from terms of size ~ (2 pi n)^2
        let n = 4000.0;
        let b = 2.0 * PI * n;
        let opts = AdaptiveOptions {
            abs_tol: 0.0,
            rel_tol: 1e-15,
            max_intervals: 50_000,
        };
        let r = integrate_panels(|x| Complex64::from(x * x.sin()), 0.0, b, 8000, &opts).unwrap();
        assert!((r.value.re / (-b) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn integration_reports_nonconvergence() {
        let opts = AdaptiveOptions {
            max_intervals: 8,
            ..Default::default()
        };
        let res = integrate_real(|x| x.abs().sqrt().recip(), -1.0, 1.0, &opts);
        assert!(matches!(res, Err(Error::NonConvergence(_))));
    }

    #[test]
    fn neville_recovers_polynomial_limit() {
        let steps = [0.1, 0.05, 0.025, 0.0125];
        let vals: Vec<Complex64> = steps
            .iter()
            .map(|h| Complex64::new(2.0 + 3.0 * h - h * h + 0.5 * h * h * h, -1.0 + h))
            .collect();
        let ex = extrapolate_to_zero(&steps, &vals).unwrap();
        assert!((ex.value - Complex64::new(2.0, -1.0)).norm() < 1e-13);
        assert_eq!(ex.estimates.len(), 4);
        assert!(ex.is_contracting());
    }
}
