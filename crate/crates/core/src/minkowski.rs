//! Four-vectors with metric signature (+, -, -, -).
//!
//! Contravariant components are stored as `(t, x)` with the standard
//! convention `x^mu = (t, x)`. Every identity in this crate is written in
//! invariant form, so the choice of sign for the spatial part is not
//! observable through the public API.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Vector3;

pub type Vec3 = Vector3<f64>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: Vec3,
}

impl FourVector {
    pub fn new(t: f64, x: Vec3) -> Self {
        Self { t, x }
    }

    pub fn from_components(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self {
            t,
            x: Vec3::new(x, y, z),
        }
    }

    pub fn zero() -> Self {
        Self::new(0.0, Vec3::zeros())
    }

    /// Minkowski inner product `a_mu b^mu = a0 b0 - a.b`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.t * other.t - self.x.dot(&other.x)
    }

    /// Invariant interval `x_mu x^mu`.
    pub fn interval(&self) -> f64 {
        self.dot(self)
    }

    /// Scale for relative comparisons of invariants: `t^2 + |x|^2`.
    pub fn euclidean_norm_squared(&self) -> f64 {
        self.t * self.t + self.x.norm_squared()
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.iter().all(|c| c.is_finite())
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.t + rhs.t, self.x + rhs.x)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.t - rhs.t, self.x - rhs.x)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, rhs: f64) -> FourVector {
        FourVector::new(self.t * rhs, self.x * rhs)
    }
}
