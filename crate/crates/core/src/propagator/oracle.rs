//! Brute-force quadrature of the defining momentum integrals.
//!
//! `S1` reduces to a radial integral
//! `-i/(4 pi^2) int_0^inf (p^2/E) sinc(p r) exp(-i E t) dp`, which only
//! converges conditionally. It is damped by `t -> t - i eps` for a ladder of
//! `eps` values and extrapolated polynomially to `eps = 0`. The ladder scale
//! is the smaller of `|t - r|`, the distance to the nearest light-cone
//! singularity in the complex `t` plane, and the Compton length `1/m`.
//!
//! The evanescent `S2` integral runs over `kappa` in `[0, m]` and is finite,
//! so it needs no regulator.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::{Regime, Separation};
use crate::error::{Error, Result};
use crate::quadrature::{extrapolate_to_zero, integrate_panels, AdaptiveOptions};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Largest damping, as a fraction of `min(|t - r|, 1/m)`; the ladder
    /// halves it.
    pub regulator_eps: f64,
    /// Momentum cutoff in units of `1/eps`: the integral stops where the
    /// damping factor `exp(-eps E)` has fallen to `exp(-momentum_cutoff)`.
    pub momentum_cutoff: f64,
    pub extrapolation_steps: usize,
    /// Bound on the last change in the extrapolation sequence, relative to
    /// the extrapolated value.
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            regulator_eps: 0.1,
            momentum_cutoff: 28.0,
            extrapolation_steps: 4,
            rel_tol: 1e-3,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        let pos = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")))
            }
        };
        pos("regulator_eps", self.regulator_eps)?;
        pos("momentum_cutoff", self.momentum_cutoff)?;
        pos("rel_tol", self.rel_tol)?;
        if self.extrapolation_steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "extrapolation_steps must be >= 2, got {}",
                self.extrapolation_steps
            )));
        }
        Ok(())
    }

    /// The damping ladder for a given scale.
    pub fn eps_ladder(&self, scale: f64) -> Vec<f64> {
        (0..self.extrapolation_steps)
            .map(|k| self.regulator_eps * scale * 0.5f64.powi(k as i32))
            .collect()
    }
}

/// Oracle value with the data behind it.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub value: Complex64,
    /// Damped integrals, one per ladder rung.
    pub samples: Vec<(f64, Complex64)>,
    /// Successive extrapolants.
    pub estimates: Vec<Complex64>,
    /// Last change in the extrapolation sequence.
    pub error_estimate: f64,
}

fn inner_opts(panels: usize) -> AdaptiveOptions {
    AdaptiveOptions {
        abs_tol: 0.0,
        rel_tol: 1e-8,
        max_intervals: 4 * panels + 20_000,
    }
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `int_0^{2P} f(p) dp`, failing unless the doubling from `P` to `2P`
/// changes it by at most `tol` (relative).
fn radial_integral<F: Fn(f64) -> Complex64>(
    f: F,
    cutoff: f64,
    frequency: f64,
    tol: f64,
) -> Result<Complex64> {
    let panels_for = |len: f64| ((len * frequency / (2.0 * PI)).ceil() as usize + 8).max(8);
    let n = panels_for(cutoff);
    let body = integrate_panels(&f, 0.0, cutoff, n, &inner_opts(n))?.value;
    // the tail only needs to be resolved well below the acceptance threshold
    let tail_opts = AdaptiveOptions {
        abs_tol: 1e-3 * tol * body.norm(),
        ..inner_opts(n)
    };
    let tail = integrate_panels(&f, cutoff, 2.0 * cutoff, n, &tail_opts)?.value;
    if tail.norm() > tol * body.norm() {
        return Err(Error::NonConvergence(format!(
            "momentum cutoff {cutoff:.4e} not converged: doubling changes the integral by {:.3e} (relative)",
            tail.norm() / body.norm()
        )));
    }
    Ok(body + tail)
}

fn check_inputs(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig) -> Result<Separation> {
    cfg.validate()?;
    if !(omega_c > 0.0 && omega_c.is_finite()) {
        return Err(Error::domain(
            "oracle",
            format!("cutoff frequency must be positive, got {omega_c}"),
        ));
    }
    let sep = Separation::new(t, r)?;
    if sep.regime() == Regime::Lightlike {
        return Err(Error::Lightlike { t, r });
    }
    Ok(sep)
}

fn damped_ladder<F>(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig, one: F) -> Result<OracleReport>
where
    F: Fn(f64, f64) -> Result<Complex64>,
{
    let scale = (t - r).abs().min(1.0 / omega_c);
    let ladder = cfg.eps_ladder(scale);
    let mut samples = Vec::with_capacity(ladder.len());
    for &eps in &ladder {
        let cutoff = cfg.momentum_cutoff / eps + omega_c;
        samples.push((eps, one(eps, cutoff)?));
    }
    let vals: Vec<Complex64> = samples.iter().map(|s| s.1).collect();
    let ex = extrapolate_to_zero(&ladder, &vals)?;
    let err = ex.last_change();
    if !ex.is_contracting() || err > cfg.rel_tol * ex.value.norm() {
        return Err(Error::NonConvergence(format!(
            "eps extrapolation at (t = {t}, r = {r}) is not settling: estimates {:?}, last change {err:.3e}",
            ex.estimates
        )));
    }
    Ok(OracleReport {
        value: ex.value,
        samples,
        estimates: ex.estimates,
        error_estimate: err,
    })
}

/// Full diagnostics for [`s1_oracle`].
pub fn s1_oracle_report(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig) -> Result<OracleReport> {
    check_inputs(t, r, omega_c, cfg)?;
    let m2 = omega_c * omega_c;
    let pref = Complex64::new(0.0, -1.0 / (4.0 * PI * PI));
    damped_ladder(t, r, omega_c, cfg, |eps, cutoff| {
        let tc = Complex64::new(t, -eps);
        let f = |p: f64| {
            let e = (p * p + m2).sqrt();
            (Complex64::new(0.0, -1.0) * tc * e).exp() * (p * p / e * sinc(p * r))
        };
        radial_integral(f, cutoff, t + r, 1e-3 * cfg.rel_tol).map(|v| v * pref)
    })
}

/// `S1(t, r)` from the damped radial momentum integral.
pub fn s1_oracle(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig) -> Result<Complex64> {
    s1_oracle_report(t, r, omega_c, cfg).map(|o| o.value)
}

/// One-dimensional measure: `-(i/2pi) int_0^inf cos(p r) exp(-i E t) / E dp`.
pub fn s1_oracle_1d_report(
    t: f64,
    r: f64,
    omega_c: f64,
    cfg: &QuadratureConfig,
) -> Result<OracleReport> {
    check_inputs(t, r, omega_c, cfg)?;
    let m2 = omega_c * omega_c;
    let pref = Complex64::new(0.0, -1.0 / (2.0 * PI));
    damped_ladder(t, r, omega_c, cfg, |eps, cutoff| {
        let tc = Complex64::new(t, -eps);
        let f = |p: f64| {
            let e = (p * p + m2).sqrt();
            (Complex64::new(0.0, -1.0) * tc * e).exp() * ((p * r).cos() / e)
        };
        radial_integral(f, cutoff, t + r, 1e-3 * cfg.rel_tol).map(|v| v * pref)
    })
}

pub fn s1_oracle_1d(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig) -> Result<Complex64> {
    s1_oracle_1d_report(t, r, omega_c, cfg).map(|o| o.value)
}

/// Evanescent-wave integral
/// `-(1/(8 pi^2 r)) d/dr int_0^m exp(-i t sqrt(m^2 - k^2) - k r) / sqrt(m^2 - k^2) dk`,
/// with the derivative taken under the integral and `k = m sin u`.
pub fn s2_oracle(t: f64, r: f64, omega_c: f64, cfg: &QuadratureConfig) -> Result<Complex64> {
    cfg.validate()?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("s2_oracle", format!("need r > 0, got {r}")));
    }
    if !(omega_c > 0.0 && omega_c.is_finite()) {
        return Err(Error::domain(
            "s2_oracle",
            format!("cutoff frequency must be positive, got {omega_c}"),
        ));
    }
    let f = |u: f64| s2_integrand(t, r, omega_c, u);
    let opts = AdaptiveOptions {
        abs_tol: 0.0,
        rel_tol: 1e-13,
        max_intervals: 50_000,
    };
    let panels = ((t * omega_c).abs() / PI).ceil() as usize + 4;
    let v = integrate_panels(f, 0.0, FRAC_PI_2, panels, &opts)?;
    Ok(v.value / (8.0 * PI * PI * r))
}

/// `kappa`-integrand of [`s2_oracle`] after the substitution, for checking
/// that it stays bounded at `u = pi/2`.
pub fn s2_integrand(t: f64, r: f64, omega_c: f64, u: f64) -> Complex64 {
    let (s, c) = u.sin_cos();
    Complex64::from_polar((-omega_c * r * s).exp() * omega_c * s, -t * omega_c * c)
}
