//! Scalar propagators of a massive guided photon.
//!
//! With `m` the cutoff frequency acting as mass, `tau = sqrt(x^2)` for
//! timelike and `rho = sqrt(-x^2)` for spacelike separations:
//!
//! * `S1 = m/(8 pi tau) H1(m tau)` and `S1 = i m/(8 pi rho) H1(-i m rho)`;
//! * the evanescent part `S2` has the same shape with prefactor `-1/16`;
//! * the form including anti-evanescent waves is `-S1` timelike and
//!   `m/(8 pi rho) I1(m rho)` spacelike;
//! * the massless limit is `D = i/(4 pi^2 x^2)`.
//!
//! Here `H1` is the Hankel function of the second kind. The light cone
//! itself carries a distributional term and is rejected.

pub mod fit;
pub mod oracle;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::FourVector;
use crate::special::{bessel_i1, hankel2, hankel2_negimag};

/// Separations with `|x^2| < LIGHTLIKE_GUARD (t^2 + r^2)` count as lightlike.
pub const LIGHTLIKE_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Timelike,
    Spacelike,
    Lightlike,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Timelike => "timelike",
            Regime::Spacelike => "spacelike",
            Regime::Lightlike => "lightlike",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A separation `(|x0|, |x|)`; the regime is derived, never supplied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Separation {
    t: f64,
    r: f64,
    x2: f64,
    regime: Regime,
}

impl Separation {
    pub fn new(t: f64, r: f64) -> Result<Self> {
        if !(t.is_finite() && r.is_finite()) || t < 0.0 || r < 0.0 {
            return Err(Error::domain(
                "Separation::new",
                format!("need finite t >= 0 and r >= 0, got t = {t}, r = {r}"),
            ));
        }
        if t == 0.0 && r == 0.0 {
            return Err(Error::domain("Separation::new", "coincident points"));
        }
        let x2 = (t - r) * (t + r);
        let regime = if x2.abs() < LIGHTLIKE_GUARD * (t * t + r * r) {
            Regime::Lightlike
        } else if x2 > 0.0 {
            Regime::Timelike
        } else {
            Regime::Spacelike
        };
        Ok(Self { t, r, x2, regime })
    }

    pub fn from_four_vector(x: &FourVector) -> Result<Self> {
        Self::new(x.t.abs(), x.x.norm())
    }

    /// Spacelike separation at equal times.
    pub fn spacelike(rho: f64) -> Result<Self> {
        Self::new(0.0, rho)
    }

    /// Timelike separation at the same place.
    pub fn timelike(tau: f64) -> Result<Self> {
        Self::new(tau, 0.0)
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// `t^2 - r^2`.
    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// `sqrt(|x^2|)`.
    pub fn proper_length(&self) -> f64 {
        self.x2.abs().sqrt()
    }

    fn require_causal(&self) -> Result<f64> {
        match self.regime {
            Regime::Lightlike => Err(Error::Lightlike {
                t: self.t,
                r: self.r,
            }),
            _ => Ok(self.proper_length()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    S1,
    S2Evanescent,
    S2Full,
    DMassless,
    /// `S1` with the one-dimensional momentum measure.
    S1OneDim,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::S1 => "s1",
            Variant::S2Evanescent => "s2",
            Variant::S2Full => "s2full",
            Variant::DMassless => "d",
            Variant::S1OneDim => "s1-1d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorValue {
    pub value: Complex64,
    pub regime: Regime,
    pub variant: Variant,
}

fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(
            "propagator",
            format!("cutoff frequency must be positive, got {m}"),
        ))
    }
}

fn value(sep: &Separation, variant: Variant, value: Complex64) -> PropagatorValue {
    PropagatorValue {
        value,
        regime: sep.regime,
        variant,
    }
}

pub fn s1_closed(sep: &Separation, omega_c: f64) -> Result<PropagatorValue> {
    check_mass(omega_c)?;
    let s = sep.require_causal()?;
    let v = match sep.regime {
        Regime::Timelike => hankel2(1, omega_c * s)? * (omega_c / (8.0 * PI * s)),
        _ => hankel2_negimag(1, omega_c * s)? * Complex64::new(0.0, omega_c / (8.0 * PI * s)),
    };
    Ok(value(sep, Variant::S1, v))
}

/// Evanescent-wave propagator.
pub fn s2_closed(sep: &Separation, omega_c: f64) -> Result<PropagatorValue> {
    check_mass(omega_c)?;
    let s = sep.require_causal()?;
    let v = match sep.regime {
        Regime::Timelike => hankel2(1, omega_c * s)? * (-omega_c / (16.0 * PI * s)),
        _ => hankel2_negimag(1, omega_c * s)? * Complex64::new(0.0, -omega_c / (16.0 * PI * s)),
    };
    Ok(value(sep, Variant::S2Evanescent, v))
}

/// Evanescent plus anti-evanescent waves; grows like `exp(m rho)` at
/// spacelike separation.
pub fn s2_full_closed(sep: &Separation, omega_c: f64) -> Result<PropagatorValue> {
    check_mass(omega_c)?;
    let s = sep.require_causal()?;
    let v = match sep.regime {
        Regime::Timelike => -s1_closed(sep, omega_c)?.value,
        _ => Complex64::new(omega_c / (8.0 * PI * s) * bessel_i1(omega_c * s)?, 0.0),
    };
    Ok(value(sep, Variant::S2Full, v))
}

/// Massless limit of [`s1_closed`], from the leading small-argument terms
/// `m H1(m tau) -> 2i/(pi tau)` and `m H1(-i m rho) -> -2/(pi rho)`.
pub fn d_massless(sep: &Separation) -> Result<PropagatorValue> {
    let s = sep.require_causal()?;
    let v = match sep.regime {
        Regime::Timelike => Complex64::new(0.0, 2.0 / (PI * s)) / (8.0 * PI * s),
        _ => Complex64::new(0.0, 1.0 / (8.0 * PI * s)) * (-2.0 / (PI * s)),
    };
    Ok(value(sep, Variant::DMassless, v))
}

/// One-dimensional analogue `-(1/4) H0(m sqrt(x^2))`, with
/// `sqrt(x^2) = -i rho` at spacelike separation.
pub fn s1_closed_1d(sep: &Separation, omega_c: f64) -> Result<PropagatorValue> {
    check_mass(omega_c)?;
    let s = sep.require_causal()?;
    let h = match sep.regime {
        Regime::Timelike => hankel2(0, omega_c * s)?,
        _ => hankel2_negimag(0, omega_c * s)?,
    };
    Ok(value(sep, Variant::S1OneDim, h * -0.25))
}

/// Dispatch on `variant`; `DMassless` ignores `omega_c`.
pub fn evaluate(variant: Variant, sep: &Separation, omega_c: f64) -> Result<PropagatorValue> {
    match variant {
        Variant::S1 => s1_closed(sep, omega_c),
        Variant::S2Evanescent => s2_closed(sep, omega_c),
        Variant::S2Full => s2_full_closed(sep, omega_c),
        Variant::DMassless => d_massless(sep),
        Variant::S1OneDim => s1_closed_1d(sep, omega_c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_from_sign() {
        assert_eq!(Separation::new(2.0, 1.0).unwrap().regime(), Regime::Timelike);
        assert_eq!(Separation::new(1.0, 2.0).unwrap().regime(), Regime::Spacelike);
        assert_eq!(Separation::new(1.0, 1.0).unwrap().regime(), Regime::Lightlike);
        assert_eq!(
            Separation::new(1.0, 1.0 + 1e-12).unwrap().regime(),
            Regime::Lightlike
        );
        assert!(Separation::new(-1.0, 0.0).is_err());
        assert!(Separation::new(0.0, 0.0).is_err());
        assert!(Separation::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn lightlike_is_rejected() {
        let sep = Separation::new(3.0, 3.0).unwrap();
        for v in [Variant::S1, Variant::S2Evanescent, Variant::S2Full, Variant::DMassless] {
            assert!(matches!(evaluate(v, &sep, 1.0), Err(Error::Lightlike { .. })));
        }
    }

    #[test]
    fn known_values() {
        // S1 spacelike = -i m K1(m rho) / (4 pi^2 rho)
        let v = s1_closed(&Separation::spacelike(1.0).unwrap(), 1.0).unwrap();
        let expect = -0.601_907_230_197_234_6 / (4.0 * PI * PI);
        assert!(v.value.re.abs() < 1e-18);
        assert!((v.value.im - expect).abs() < 1e-15);
        // S1 timelike at tau = 1: (J1 - i Y1)(1) / (8 pi)
        let v = s1_closed(&Separation::timelike(1.0).unwrap(), 1.0).unwrap();
        let h = Complex64::new(0.440_050_585_744_933_5, 0.781_212_821_300_288_7) / (8.0 * PI);
        assert!((v.value - h).norm() < 1e-15);
    }

    #[test]
    fn half_relation_and_full_form() {
        for (t, r) in [(2.0, 1.0), (0.0, 3.0), (7.0, 6.5), (0.3, 9.0)] {
            let sep = Separation::new(t, r).unwrap();
            let a = s1_closed(&sep, 1.3).unwrap().value;
            let b = s2_closed(&sep, 1.3).unwrap().value;
            assert!((b + a / 2.0).norm() <= 1e-12 * a.norm());
        }
        let sep = Separation::new(2.0, 1.0).unwrap();
        assert_eq!(
            s2_full_closed(&sep, 1.0).unwrap().value,
            -s1_closed(&sep, 1.0).unwrap().value
        );
        let small = s2_full_closed(&Separation::spacelike(1e-6).unwrap(), 1.0).unwrap();
        assert!((small.value.re / (1.0 / (16.0 * PI)) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn massless_limit() {
        for (t, r) in [(0.0, 2.0), (3.0, 1.0)] {
            let sep = Separation::new(t, r).unwrap();
            let d = d_massless(&sep).unwrap().value;
            let expect = Complex64::new(0.0, 1.0 / (4.0 * PI * PI * sep.x2()));
            assert!((d - expect).norm() < 1e-15 * expect.norm());
            let m = 1e-6 / sep.proper_length();
            let s = s1_closed(&sep, m).unwrap().value;
            assert!((s - d).norm() / d.norm() < 1e-4);
        }
        let a = d_massless(&Separation::spacelike(2.0).unwrap()).unwrap().value;
        let b = d_massless(&Separation::spacelike(4.0).unwrap()).unwrap().value;
        assert!((a / b - 4.0).norm() < 1e-12);
    }

    #[test]
    fn one_dim_spacelike_is_k0() {
        let v = s1_closed_1d(&Separation::spacelike(1.0).unwrap(), 1.0).unwrap();
        let expect = -0.421_024_438_240_708_3 / (2.0 * PI);
        assert!((v.value.im - expect).abs() < 1e-15 && v.value.re.abs() < 1e-18);
    }
}
