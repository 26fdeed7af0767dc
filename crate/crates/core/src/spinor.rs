//! The (1,0)+(0,1) six-component spinor form of the free photon field.
//!
//! A field configuration `(E, B)` is housed in `psi = (E, iB)/sqrt(2)`. The
//! generator matrices are
//!
//! ```text
//! beta0 = diag(I3, -I3)      beta^i = [[0, tau_i], [-tau_i, 0]]
//! chi^i = beta0 beta^i       S^i    = I2 (x) tau_i
//! ```
//!
//! with `(tau_i)_jk = -i eps_ijk`. Plane waves satisfy
//! `(omega beta0 - beta.k) psi = 0`, equivalently `(omega - chi.k) psi = 0`.

use std::sync::OnceLock;

use nalgebra::{Matrix3, SymmetricEigen, Vector3, Vector6};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::Vec3;
use crate::waveguide::frame_basis;

pub type Matrix6 = nalgebra::Matrix6<Complex64>;
pub type CVec3 = Vector3<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Six complex amplitudes; upper triple electric, lower triple `i` times magnetic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor6(Vector6<Complex64>);

impl Spinor6 {
    pub fn from_vector(v: Vector6<Complex64>) -> Self {
        Self(v)
    }

    pub fn from_triples(upper: &CVec3, lower: &CVec3) -> Self {
        Self(Vector6::new(
            upper[0], upper[1], upper[2], lower[0], lower[1], lower[2],
        ))
    }

    pub fn as_vector(&self) -> &Vector6<Complex64> {
        &self.0
    }

    pub fn upper(&self) -> CVec3 {
        CVec3::new(self.0[0], self.0[1], self.0[2])
    }

    pub fn lower(&self) -> CVec3 {
        CVec3::new(self.0[3], self.0[4], self.0[5])
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Dirac adjoint as a row: `psi^dagger beta0`.
    pub fn adjoint_row(&self) -> nalgebra::RowVector6<Complex64> {
        self.0.adjoint() * generators().beta0
    }
}

impl std::ops::Index<usize> for Spinor6 {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

/// Helicity label: spin projection on the wave vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Helicity {
    Minus,
    Zero,
    Plus,
}

impl Helicity {
    pub const ALL: [Helicity; 3] = [Helicity::Plus, Helicity::Minus, Helicity::Zero];
    pub const TRANSVERSE: [Helicity; 2] = [Helicity::Plus, Helicity::Minus];

    pub fn value(self) -> f64 {
        match self {
            Helicity::Minus => -1.0,
            Helicity::Zero => 0.0,
            Helicity::Plus => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `f(k, lambda)`, attached to `exp(-i k.x)`.
    Positive,
    /// `g(k, lambda)`, attached to `exp(+i k.x)`.
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveVector {
    k: Vec3,
}

impl WaveVector {
    pub fn new(k: Vec3) -> Self {
        Self { k }
    }

    pub fn from_components(k1: f64, k2: f64, k3: f64) -> Self {
        Self::new(Vec3::new(k1, k2, k3))
    }

    pub fn k(&self) -> &Vec3 {
        &self.k
    }

    /// `omega = |k|` on the light cone.
    pub fn omega(&self) -> f64 {
        self.k.norm()
    }

    fn require_nonzero(&self, op: &'static str) -> Result<()> {
        let n = self.k.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::domain(op, "wave vector must be finite and nonzero"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationTriplet {
    pub plus: CVec3,
    pub minus: CVec3,
    pub zero: CVec3,
}

impl PolarizationTriplet {
    pub fn get(&self, h: Helicity) -> &CVec3 {
        match h {
            Helicity::Plus => &self.plus,
            Helicity::Minus => &self.minus,
            Helicity::Zero => &self.zero,
        }
    }

    /// `sum_lambda eps(lambda) eps(lambda)^dagger` over the given helicities.
    pub fn projector(&self, helicities: &[Helicity]) -> Matrix3<Complex64> {
        helicities
            .iter()
            .map(|&h| {
                let e = self.get(h);
                e * e.adjoint()
            })
            .fold(Matrix3::zeros(), |acc, p| acc + p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generators {
    pub beta0: Matrix6,
    pub beta: [Matrix6; 3],
    pub chi: [Matrix6; 3],
    pub spin: [Matrix6; 3],
}

/// `(tau_i)_jk = -i eps_ijk`, for `i` in `0..3`.
pub fn tau(i: usize) -> Matrix3<Complex64> {
    let mut m = Matrix3::zeros();
    for j in 0..3 {
        for k in 0..3 {
            m[(j, k)] = -I * levi_civita(i, j, k);
        }
    }
    m
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

fn blocks(
    a: &Matrix3<Complex64>,
    b: &Matrix3<Complex64>,
    c: &Matrix3<Complex64>,
    d: &Matrix3<Complex64>,
) -> Matrix6 {
    let mut m = Matrix6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(a);
    m.fixed_view_mut::<3, 3>(0, 3).copy_from(b);
    m.fixed_view_mut::<3, 3>(3, 0).copy_from(c);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(d);
    m
}

fn block_diag(a: &Matrix3<Complex64>) -> Matrix6 {
    blocks(a, &Matrix3::zeros(), &Matrix3::zeros(), a)
}

pub fn build_generators() -> Generators {
    let id3 = Matrix3::<Complex64>::identity();
    let zero3 = Matrix3::<Complex64>::zeros();
    let beta0 = blocks(&id3, &zero3, &zero3, &(-id3));
    let taus = [tau(0), tau(1), tau(2)];
    let beta = taus.map(|t| blocks(&zero3, &t, &(-t), &zero3));
    let chi = beta.map(|b| beta0 * b);
    let spin = taus.map(|t| block_diag(&t));
    Generators {
        beta0,
        beta,
        chi,
        spin,
    }
}

/// Shared, lazily built generator set.
pub fn generators() -> &'static Generators {
    static GENERATORS: OnceLock<Generators> = OnceLock::new();
    GENERATORS.get_or_init(build_generators)
}

fn contract(ms: &[Matrix6; 3], k: &Vec3) -> Matrix6 {
    ms.iter()
        .zip(k.iter())
        .fold(Matrix6::zeros(), |acc, (m, &ki)| acc + m * Complex64::from(ki))
}

/// `chi . k`, the plane-wave Hamiltonian.
pub fn chi_dot(k: &Vec3) -> Matrix6 {
    contract(&generators().chi, k)
}

/// `beta^mu k_mu = omega beta0 - beta . k` with `omega` treated as free.
pub fn beta_dot(omega: f64, k: &Vec3) -> Matrix6 {
    generators().beta0 * Complex64::from(omega) - contract(&generators().beta, k)
}

/// Plane-wave form of the `Omega` operator: `I2 (x) k k^T`.
///
/// Under `exp(i k.x)` each gradient becomes `i k_j`, so `grad_i grad_j`
/// becomes `-k_i k_j`; the same factor multiplies the wave operator on the
/// other side, leaving `(beta.k)^2 = k^2 I6 + I2 (x) k k^T`.
pub fn omega_hat(k: &Vec3) -> Matrix6 {
    let kk = (k * k.transpose()).map(Complex64::from);
    block_diag(&kk)
}

/// Sorted (descending) eigenvalues of the Hermitian matrix `chi . k`.
pub fn chi_spectrum(k: &Vec3) -> [f64; 6] {
    let eig = SymmetricEigen::new(chi_dot(k));
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    [vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]]
}

/// Circular polarization vectors built from the linear frame of `k`:
/// `eps(+-1) = (e1 +- i e2)/sqrt(2)`, `eps(0) = k/|k|`.
pub fn polarization_basis(k: &WaveVector) -> Result<PolarizationTriplet> {
    k.require_nonzero("polarization_basis")?;
    let frame = frame_basis(k.k())?;
    let e1 = frame.e1.map(Complex64::from);
    let e2 = frame.e2.map(Complex64::from);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let plus = (e1 + e2 * I) * Complex64::from(s);
    Ok(PolarizationTriplet {
        plus,
        minus: plus.map(|c| c.conj()),
        zero: frame.e3.map(Complex64::from),
    })
}

/// Unit-normalized amplitude spinor `f(k, lambda)` (positive branch) or
/// `g(k, lambda)` (negative branch).
pub fn amplitude_spinor(k: &WaveVector, lambda: Helicity, branch: Branch) -> Result<Spinor6> {
    k.require_nonzero("amplitude_spinor")?;
    let eps = *polarization_basis(k)?.get(lambda);
    let l = lambda.value();
    let norm = Complex64::from(1.0 / (1.0 + l * l).sqrt());
    let scaled = eps * Complex64::from(l);
    let spinor = match branch {
        Branch::Positive => Spinor6::from_triples(&(eps * norm), &(scaled * norm)),
        Branch::Negative => Spinor6::from_triples(&(scaled * norm), &(eps * norm)),
    };
    Ok(spinor)
}

pub fn fields_to_spinor(e: &Vec3, b: &Vec3) -> Spinor6 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let upper = e.map(|c| Complex64::new(c * s, 0.0));
    let lower = b.map(|c| Complex64::new(0.0, c * s));
    Spinor6::from_triples(&upper, &lower)
}

/// Inverse of [`fields_to_spinor`]; imaginary parts outside the housing
/// pattern are discarded.
pub fn spinor_to_fields(psi: &Spinor6) -> (Vec3, Vec3) {
    let r2 = std::f64::consts::SQRT_2;
    let e = psi.upper().map(|c| c.re * r2);
    let b = psi.lower().map(|c| c.im * r2);
    (e, b)
}

/// `(I6)_perp = I2 (x) sum_{lambda = +-1} eps eps^dagger`.
pub fn transverse_identity(k: &WaveVector) -> Result<Matrix6> {
    let pol = polarization_basis(k)?;
    Ok(block_diag(&pol.projector(&Helicity::TRANSVERSE)))
}

/// Explicit sum over `lambda = +-1` of `u(k, lambda) ubar(k, lambda)` for the
/// chosen branch, with `ubar = u^dagger beta0`.
pub fn spin_sum(k: &WaveVector, branch: Branch) -> Result<Matrix6> {
    k.require_nonzero("spin_sum")?;
    let mut acc = Matrix6::zeros();
    for h in Helicity::TRANSVERSE {
        let u = amplitude_spinor(k, h, branch)?;
        acc += u.as_vector() * u.adjoint_row();
    }
    Ok(acc)
}

/// Closed form `(beta^mu k_mu / 2 omega) (I6)_perp` at `omega = |k|`.
pub fn spin_sum_closed_form(k: &WaveVector) -> Result<Matrix6> {
    k.require_nonzero("spin_sum")?;
    let omega = k.omega();
    let perp = transverse_identity(k)?;
    Ok(beta_dot(omega, k.k()) * perp * Complex64::from(0.5 / omega))
}

/// Max entrywise `|(beta.k)^2 - k^2 I6 - Omega_hat(k)|` with `omega` free.
pub fn omega_identity_check(omega: f64, k: &Vec3) -> f64 {
    let b = beta_dot(omega, k);
    let k2 = omega * omega - k.norm_squared();
    let rhs = Matrix6::identity() * Complex64::from(k2) + omega_hat(k);
    max_abs_entry(&(b * b - rhs))
}

/// `|(omega beta0 - beta.k) psi|`.
pub fn dirac_residual(psi: &Spinor6, omega: f64, k: &Vec3) -> f64 {
    (beta_dot(omega, k) * psi.as_vector()).norm()
}

pub fn max_abs_entry(m: &Matrix6) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}
