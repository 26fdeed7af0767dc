//! Hankel functions of the second kind for orders 0 and 1 on the positive
//! real and negative imaginary axes, and the modified Bessel function `I1`.
//!
//! Values come from [`bessel`]; the quadrature representations in
//! [`integral`] are independent of it and serve as test oracles.

pub mod bessel;
pub mod integral;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Which ray of the complex plane a Hankel argument lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HankelKind {
    /// `z > 0`.
    RealPositive,
    /// `-i s` with `s > 0`.
    NegativeImaginary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HankelArg {
    kind: HankelKind,
    magnitude: f64,
}

impl HankelArg {
    pub fn new(kind: HankelKind, magnitude: f64) -> Result<Self> {
        if !(magnitude > 0.0 && magnitude.is_finite()) {
            return Err(Error::domain(
                "HankelArg::new",
                format!("magnitude must be positive and finite, got {magnitude}"),
            ));
        }
        Ok(Self { kind, magnitude })
    }

    pub fn real(z: f64) -> Result<Self> {
        Self::new(HankelKind::RealPositive, z)
    }

    pub fn negative_imaginary(s: f64) -> Result<Self> {
        Self::new(HankelKind::NegativeImaginary, s)
    }

    pub fn kind(&self) -> HankelKind {
        self.kind
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// The argument as a complex number.
    pub fn value(&self) -> Complex64 {
        match self.kind {
            HankelKind::RealPositive => Complex64::new(self.magnitude, 0.0),
            HankelKind::NegativeImaginary => Complex64::new(0.0, -self.magnitude),
        }
    }

    /// `H_nu^(2)` at this argument.
    pub fn hankel2(&self, nu: u32) -> Result<Complex64> {
        match self.kind {
            HankelKind::RealPositive => hankel2(nu, self.magnitude),
            HankelKind::NegativeImaginary => hankel2_negimag(nu, self.magnitude),
        }
    }
}

fn check_order(nu: u32) -> Result<()> {
    if nu > 1 {
        Err(Error::UnsupportedOrder(nu))
    } else {
        Ok(())
    }
}

fn check_positive(op: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("argument must be positive and finite, got {x}")))
    }
}

/// `H_nu^(2)(z) = J_nu(z) - i Y_nu(z)` for `z > 0`, `nu` in {0, 1}.
pub fn hankel2(nu: u32, z: f64) -> Result<Complex64> {
    check_order(nu)?;
    check_positive("hankel2", z)?;
    let v = bessel::bessel_jy01(z);
    Ok(match nu {
        0 => Complex64::new(v.j0, -v.y0),
        _ => Complex64::new(v.j1, -v.y1),
    })
}

/// `H_nu^(2)(-i s)` for `s > 0`:
/// `H0(-is) = (2i/pi) K0(s)` and `H1(-is) = -(2/pi) K1(s)`.
pub fn hankel2_negimag(nu: u32, s: f64) -> Result<Complex64> {
    check_order(nu)?;
    check_positive("hankel2_negimag", s)?;
    let (k0, k1) = bessel::bessel_k01(s);
    Ok(match nu {
        0 => Complex64::new(0.0, 2.0 / PI * k0),
        _ => Complex64::new(-2.0 / PI * k1, 0.0),
    })
}

/// Modified Bessel function `I1(x)` for `x > 0`.
pub fn bessel_i1(x: f64) -> Result<f64> {
    check_positive("bessel_i1", x)?;
    Ok(bessel::bessel_i1_raw(x))
}

/// Leading large-argument form `sqrt(2/(pi z)) exp(-i(z - nu pi/2 - pi/4))`.
pub fn hankel2_asymptotic(nu: u32, z: f64) -> Result<Complex64> {
    check_order(nu)?;
    check_positive("hankel2_asymptotic", z)?;
    let phase = z - f64::from(nu) * PI / 2.0 - PI / 4.0;
    Ok(Complex64::from_polar((2.0 / (PI * z)).sqrt(), -phase))
}
