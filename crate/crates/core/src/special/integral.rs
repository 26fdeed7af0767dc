//! Quadrature representations used as oracles for the closed forms.
//!
//! For real `z > 0` the Sommerfeld contour for `H0^(2)` folds into a finite
//! oscillatory piece plus an exponentially damped tail:
//!
//! `H0^(2)(z) = (2/pi) int_0^{pi/2} exp(-i z cos th) dth
//!            + (2i/pi) int_0^inf exp(-z sinh t) dt`.
//!
//! The first term alone is `J0 - i H0_Struve`, not the Hankel function.
//! On the negative imaginary axis the contour integral converges absolutely:
//! `H0^(2)(-is) = (2i/pi) int_0^inf exp(-s cosh t) dt`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate, integrate_real, AdaptiveOptions};

/// Relative step for the finite-difference derivatives.
pub const FD_STEP: f64 = 1e-4;
const TAIL_EXPONENT: f64 = 45.0;

fn tight() -> AdaptiveOptions {
    AdaptiveOptions {
        abs_tol: 1e-16,
        rel_tol: 1e-14,
        max_intervals: 20_000,
    }
}

fn positive(op: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("argument must be positive, got {x}")))
    }
}

/// `(2/pi) int_0^{pi/2} exp(-i z cos th) dth`, which equals `J0(z) - i H0(z)`
/// with `H0` the Struve function.
pub fn compact_form(z: f64) -> Result<Complex64> {
    let r = integrate(
        |th| Complex64::from_polar(1.0, -z * th.cos()),
        0.0,
        FRAC_PI_2,
        &tight(),
    )?;
    Ok(r.value * (2.0 / PI))
}

/// `H0^(2)(z)` by quadrature of the folded contour.
pub fn hankel2_0_quadrature(z: f64) -> Result<Complex64> {
    positive("hankel2_0_quadrature", z)?;
    let upper = (TAIL_EXPONENT / z).asinh();
    let tail = integrate_real(|t| (-z * t.sinh()).exp(), 0.0, upper, &tight())?;
    Ok(compact_form(z)? + Complex64::new(0.0, 2.0 / PI * tail))
}

/// Five-point central derivative, Richardson-extrapolated over `h`, `h/2`.
fn derivative<F: Fn(f64) -> Result<Complex64>>(f: F, x: f64, h: f64) -> Result<Complex64> {
    let stencil = |h: f64| -> Result<Complex64> {
        Ok((f(x - 2.0 * h)? - f(x + 2.0 * h)? + (f(x + h)? - f(x - h)?) * 8.0) / (12.0 * h))
    };
    let coarse = stencil(h)?;
    let fine = stencil(0.5 * h)?;
    Ok(fine + (fine - coarse) / 15.0)
}

/// `H_nu^(2)(z)` from quadrature; `nu = 1` via `H1 = -dH0/dz` by finite
/// differences with step `1e-4 max(1, z)`.
pub fn hankel2_quadrature(nu: u32, z: f64) -> Result<Complex64> {
    positive("hankel2_quadrature", z)?;
    match nu {
        0 => hankel2_0_quadrature(z),
        1 => {
            let h = FD_STEP * z.max(1.0);
            if z <= 2.0 * h {
                return Err(Error::domain(
                    "hankel2_quadrature",
                    format!("z = {z} too close to the branch point for the stencil"),
                ));
            }
            Ok(-derivative(hankel2_0_quadrature, z, h)?)
        }
        n => Err(Error::UnsupportedOrder(n)),
    }
}

/// `H_nu^(2)(-is)` from the absolutely convergent contour integral; the
/// order-one case differentiates under the integral sign.
pub fn hankel2_negimag_quadrature(nu: u32, s: f64) -> Result<Complex64> {
    positive("hankel2_negimag_quadrature", s)?;
    let upper = (TAIL_EXPONENT / s + 1.0).acosh().max(1.0);
    match nu {
        0 => {
            let v = integrate_real(|t| (-s * t.cosh()).exp(), 0.0, upper, &tight())?;
            Ok(Complex64::new(0.0, 2.0 / PI * v))
        }
        1 => {
            // H1(-is) = -i d/ds H0(-is)
            let v = integrate_real(|t| t.cosh() * (-s * t.cosh()).exp(), 0.0, upper, &tight())?;
            Ok(Complex64::new(-2.0 / PI * v, 0.0))
        }
        n => Err(Error::UnsupportedOrder(n)),
    }
}

/// Finite-difference `-i d/ds` of a function of `s`, i.e. `-d/dz` at
/// `z = -is`.
pub fn negimag_recurrence<F: Fn(f64) -> Result<Complex64>>(f: F, s: f64) -> Result<Complex64> {
    let h = FD_STEP * s.max(1.0);
    Ok(derivative(f, s, h)? * Complex64::new(0.0, -1.0))
}

/// Finite-difference `-d/dz` of a function of real `z`.
pub fn real_recurrence<F: Fn(f64) -> Result<Complex64>>(f: F, z: f64) -> Result<Complex64> {
    let h = FD_STEP * z.max(1.0);
    Ok(-derivative(f, z, h)?)
}

/// `I1(x) = (1/pi) int_0^pi exp(x cos th) cos th dth`.
pub fn bessel_i1_quadrature(x: f64) -> Result<f64> {
    positive("bessel_i1_quadrature", x)?;
    // scale out exp(x) to keep the integrand O(1)
    let v = integrate_real(
        |th| (x * (th.cos() - 1.0)).exp() * th.cos(),
        0.0,
        PI,
        &tight(),
    )?;
    Ok(v / PI * x.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{bessel, hankel2, hankel2_negimag};

    #[test]
    fn compact_form_is_not_the_hankel_function() {
        let z = 1.0;
        let c = compact_form(z).unwrap();
        let v = bessel::bessel_jy01(z);
        assert!((c.re - v.j0).abs() < 1e-14);
        // Struve H0(1) = 0.5686566270482879
        assert!((c.im + 0.568_656_627_048_287_9).abs() < 1e-13);
        assert!((c.im + v.y0).abs() > 0.4);
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        for z in [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 50.0] {
            let q = hankel2_0_quadrature(z).unwrap();
            let h = hankel2(0, z).unwrap();
            assert!((q - h).norm() / h.norm() < 1e-12, "z = {z}: {q} vs {h}");
        }
        for s in [0.2, 1.0, 3.0, 8.0, 20.0] {
            for nu in [0, 1] {
                let q = hankel2_negimag_quadrature(nu, s).unwrap();
                let h = hankel2_negimag(nu, s).unwrap();
                assert!((q - h).norm() / h.norm() < 1e-12, "nu = {nu}, s = {s}");
            }
        }
    }

    #[test]
    fn i1_integral() {
        let q = bessel_i1_quadrature(10.0).unwrap();
        let v = bessel::bessel_i1_raw(10.0);
        assert!((q - v).abs() / v < 1e-12);
    }

    #[test]
    fn negimag_recurrence_at_three() {
        let d = negimag_recurrence(|s| hankel2_negimag(0, s), 3.0).unwrap();
        let h1 = hankel2_negimag(1, 3.0).unwrap();
        assert!((d - h1).norm() / h1.norm() < 1e-9);
    }
}
