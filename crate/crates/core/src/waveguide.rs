//! Guided-photon kinematics for a straight rectangular waveguide.
//!
//! Units are natural (`hbar = c = 1`): lengths in user units, frequencies,
//! momenta and masses in inverse user units. The lowest cutoff `pi / b1`
//! plays the role of a rest mass, so guided photons obey `E^2 = p^2 + m^2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::minkowski::{FourVector, Vec3};

/// Relative tolerance for accepting a four-momentum as light-like.
pub const LIGHTLIKE_TOL: f64 = 1e-10;
/// Relative tolerance for matching `|k_perp|` against a mode cutoff.
pub const TRANSVERSE_TOL: f64 = 1e-9;
/// Below this fraction of `|p|^2` the transverse part is treated as zero.
const AXIAL_EPS: f64 = 1e-24;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveguideSpec {
    b1: f64,
    b2: f64,
    orientation: Vec3,
}

impl WaveguideSpec {
    /// Requires `b1 > b2 > 0` and a nonzero orientation, which is normalized.
    pub fn new(b1: f64, b2: f64, orientation: Vec3) -> Result<Self> {
        if !(b1 > b2) {
            return Err(Error::InvalidWaveguide(format!(
                "need b1 > b2 (got b1 = {b1}, b2 = {b2}); pass allow_square for b1 = b2"
            )));
        }
        Self::build(b1, b2, orientation)
    }

    /// Like [`WaveguideSpec::new`] but also accepts the degenerate `b1 == b2`.
    pub fn new_allow_square(b1: f64, b2: f64, orientation: Vec3) -> Result<Self> {
        if b2 > b1 {
            return Err(Error::InvalidWaveguide(format!(
                "need b1 >= b2 (got b1 = {b1}, b2 = {b2})"
            )));
        }
        Self::build(b1, b2, orientation)
    }

    /// Guide along `+z`.
    pub fn axial(b1: f64, b2: f64) -> Result<Self> {
        Self::new(b1, b2, Vec3::z())
    }

    fn build(b1: f64, b2: f64, orientation: Vec3) -> Result<Self> {
        if !(b2 > 0.0) || !b1.is_finite() {
            return Err(Error::InvalidWaveguide(format!(
                "dimensions must be finite and positive (b1 = {b1}, b2 = {b2})"
            )));
        }
        let n = orientation.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::InvalidWaveguide(
                "orientation must be a finite nonzero vector".into(),
            ));
        }
        Ok(Self {
            b1,
            b2,
            orientation: orientation / n,
        })
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    /// Unit vector along the guide axis.
    pub fn orientation(&self) -> &Vec3 {
        &self.orientation
    }

    /// Lowest cutoff `pi / b1`, the effective photon mass.
    pub fn lowest_cutoff(&self) -> f64 {
        PI / self.b1
    }

    pub fn effective_mass(&self) -> f64 {
        self.lowest_cutoff()
    }

    /// Light-like four-momentum of mode `(r, s)` with axial momentum `k3`:
    /// `k_perp = e1 r pi/b1 + e2 s pi/b2` in the frame of the guide axis.
    pub fn photon_momentum(&self, mode: ModeIndex, k3: f64) -> FourVector {
        let frame = frame_basis(&self.orientation).expect("orientation is a unit vector");
        let k1 = f64::from(mode.r()) * PI / self.b1;
        let k2 = f64::from(mode.s()) * PI / self.b2;
        let k = frame.e1 * k1 + frame.e2 * k2 + frame.e3 * k3;
        FourVector::new(k.norm(), k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeIndex {
    r: u32,
    s: u32,
}

impl ModeIndex {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidMode { r, s });
        }
        Ok(Self { r, s })
    }

    pub fn lowest() -> Self {
        Self { r: 1, s: 0 }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }
}

/// `omega_rs = pi sqrt((r/b1)^2 + (s/b2)^2)`.
pub fn cutoff_frequency(spec: &WaveguideSpec, mode: ModeIndex) -> f64 {
    let a = f64::from(mode.r) / spec.b1;
    let b = f64::from(mode.s) / spec.b2;
    PI * a.hypot(b)
}

/// Every mode with cutoff at or below `max_freq`, ascending by cutoff
/// (ties broken by `(r, s)`).
pub fn enumerate_modes(spec: &WaveguideSpec, max_freq: f64) -> Vec<(ModeIndex, f64)> {
    let mut out = Vec::new();
    if !(max_freq > 0.0) || !max_freq.is_finite() {
        return out;
    }
    let r_max = (max_freq * spec.b1 / PI).floor() as u32;
    for r in 1..=r_max {
        let s_max = (max_freq * spec.b2 / PI).floor() as u32;
        for s in 0..=s_max {
            let mode = ModeIndex { r, s };
            let w = cutoff_frequency(spec, mode);
            if w <= max_freq {
                out.push((mode, w));
            }
        }
    }
    out.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuidedPhotonState {
    pub energy: f64,
    pub momentum: Vec3,
    pub mass: f64,
}

impl GuidedPhotonState {
    pub fn four_momentum(&self) -> FourVector {
        FourVector::new(self.energy, self.momentum)
    }

    /// `E^2 - |p|^2 - m^2`.
    pub fn dispersion_residual(&self) -> f64 {
        self.energy * self.energy - self.momentum.norm_squared() - self.mass * self.mass
    }
}

/// Traveling state at frequency `omega` in the lowest mode.
pub fn guided_state(spec: &WaveguideSpec, omega: f64) -> Result<GuidedPhotonState> {
    state_with_mass(spec, spec.lowest_cutoff(), omega)
}

/// Traveling state at frequency `omega`, with the mode's own cutoff as mass.
pub fn guided_state_for_mode(
    spec: &WaveguideSpec,
    mode: ModeIndex,
    omega: f64,
) -> Result<GuidedPhotonState> {
    state_with_mass(spec, cutoff_frequency(spec, mode), omega)
}

fn state_with_mass(spec: &WaveguideSpec, mass: f64, omega: f64) -> Result<GuidedPhotonState> {
    if !omega.is_finite() || omega <= mass {
        return Err(Error::BelowCutoff {
            omega,
            cutoff: mass,
        });
    }
    let p = ((omega - mass) * (omega + mass)).sqrt();
    Ok(GuidedPhotonState {
        energy: omega,
        momentum: spec.orientation * p,
        mass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseVelocity {
    Finite(Vec3),
    /// At rest (`|p| = 0`) the phase velocity diverges.
    Divergent,
}

impl PhaseVelocity {
    pub fn magnitude(&self) -> f64 {
        match self {
            PhaseVelocity::Finite(v) => v.norm(),
            PhaseVelocity::Divergent => f64::INFINITY,
        }
    }

    pub fn finite(&self) -> Option<&Vec3> {
        match self {
            PhaseVelocity::Finite(v) => Some(v),
            PhaseVelocity::Divergent => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocities {
    pub group: Vec3,
    pub phase: PhaseVelocity,
}

impl Velocities {
    /// `v_g . v_p`, which equals one for every moving state.
    pub fn product(&self) -> Option<f64> {
        self.phase.finite().map(|vp| self.group.dot(vp))
    }
}

pub fn velocities(state: &GuidedPhotonState) -> Velocities {
    let group = state.momentum / state.energy;
    let p = state.momentum.norm();
    let phase = if p > 0.0 {
        PhaseVelocity::Finite(state.momentum / p * (state.energy / p))
    } else {
        PhaseVelocity::Divergent
    };
    Velocities { group, phase }
}

/// `m / sqrt(1 - v^2)`.
pub fn relativistic_energy(mass: f64, group_velocity: &Vec3) -> f64 {
    mass / (1.0 - group_velocity.norm_squared()).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBasis {
    pub e1: Vec3,
    pub e2: Vec3,
    pub e3: Vec3,
}

/// Right-handed orthonormal triad with `e3 = p/|p|`, obtained by rotating
/// the Cartesian axes about `z x p`. On the `+z` axis it is the identity.
pub fn frame_basis(p: &Vec3) -> Result<FrameBasis> {
    let n = p.norm();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::domain("frame_basis", "vector must be finite and nonzero"));
    }
    let (p1, p2, p3) = (p[0], p[1], p[2]);
    let rho2 = p1 * p1 + p2 * p2;
    let e3 = p / n;
    if rho2 < AXIAL_EPS * n * n {
        let (e1, e2) = if p3 > 0.0 {
            (Vec3::x(), Vec3::y())
        } else {
            (Vec3::x(), -Vec3::y())
        };
        return Ok(FrameBasis { e1, e2, e3 });
    }
    // p3 + |p| without cancellation on the lower hemisphere
    let s = if p3 >= 0.0 { p3 + n } else { rho2 / (n - p3) };
    let a = 1.0 / (n * s);
    let e1 = Vec3::new(1.0 - p1 * p1 * a, -p1 * p2 * a, -p1 / n);
    let e2 = Vec3::new(-p1 * p2 * a, 1.0 - p2 * p2 * a, -p2 / n);
    Ok(FrameBasis { e1, e2, e3 })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumDecomposition {
    pub k: FourVector,
    /// `(0, k_perp)`, space-like, `= m eta`.
    pub transverse: FourVector,
    /// `(E, p)`, time-like.
    pub longitudinal: FourVector,
    pub eta: FourVector,
    pub mass: f64,
}

/// Split a light-like `k` into the frozen transverse part and the traveling
/// longitudinal part relative to the guide axis.
pub fn decompose_momentum(
    k: &FourVector,
    spec: &WaveguideSpec,
    mode: ModeIndex,
) -> Result<MomentumDecomposition> {
    let scale = k.euclidean_norm_squared();
    if !k.is_finite() || !(scale > 0.0) {
        return Err(Error::domain("decompose_momentum", "momentum must be finite and nonzero"));
    }
    if k.interval().abs() > LIGHTLIKE_TOL * scale {
        return Err(Error::domain(
            "decompose_momentum",
            format!("momentum is not light-like (k.k = {})", k.interval()),
        ));
    }
    let axis = spec.orientation;
    let k_par = axis * k.x.dot(&axis);
    let k_perp = k.x - k_par;
    let mass = cutoff_frequency(spec, mode);
    if (k_perp.norm() - mass).abs() > TRANSVERSE_TOL * mass {
        return Err(Error::domain(
            "decompose_momentum",
            format!(
                "transverse magnitude {} does not match mode cutoff {mass}",
                k_perp.norm()
            ),
        ));
    }
    let transverse = FourVector::new(0.0, k_perp);
    Ok(MomentumDecomposition {
        k: *k,
        transverse,
        longitudinal: FourVector::new(k.t, k_par),
        eta: transverse * (1.0 / mass),
        mass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositionDecomposition {
    /// `(0, x_perp)`.
    pub transverse: FourVector,
    /// `(t, r)` with `r` the axial projection.
    pub longitudinal: FourVector,
}

pub fn decompose_position(x: &FourVector, spec: &WaveguideSpec) -> PositionDecomposition {
    let axis = spec.orientation;
    let r = axis * x.x.dot(&axis);
    PositionDecomposition {
        transverse: FourVector::new(0.0, x.x - r),
        longitudinal: FourVector::new(x.t, r),
    }
}

/// Equivalent Compton wavelength `1/m`.
pub fn compton_wavelength(mass: f64) -> Result<f64> {
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(Error::domain("compton_wavelength", format!("mass must be positive, got {mass}")));
    }
    Ok(1.0 / mass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_examples() {
        let g = WaveguideSpec::axial(2.0, 1.0).unwrap();
        let m10 = ModeIndex::new(1, 0).unwrap();
        let m11 = ModeIndex::new(1, 1).unwrap();
        assert_eq!(cutoff_frequency(&g, m10), PI / 2.0);
        assert!((cutoff_frequency(&g, m11) - PI * 5f64.sqrt() / 2.0).abs() < 1e-15);
        let modes = enumerate_modes(&g, 2.0 * PI);
        assert_eq!(modes[0].0, m10);
        assert_eq!(modes[0].1, g.lowest_cutoff());
        assert!(modes.windows(2).all(|w| w[0].1 <= w[1].1));
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(WaveguideSpec::axial(1.0, 1.0).is_err());
        assert!(WaveguideSpec::axial(1.0, 2.0).is_err());
        assert!(WaveguideSpec::axial(1.0, 0.0).is_err());
        assert!(WaveguideSpec::new(2.0, 1.0, Vec3::zeros()).is_err());
        assert!(WaveguideSpec::new_allow_square(1.0, 1.0, Vec3::z()).is_ok());
        assert!(ModeIndex::new(0, 3).is_err());
    }

    #[test]
    fn guided_state_examples() {
        let g = WaveguideSpec::axial(PI, 1.0).unwrap();
        assert_eq!(g.effective_mass(), 1.0);
        let s = guided_state(&g, 2.0).unwrap();
        assert!((s.momentum.norm() - 3f64.sqrt()).abs() < 1e-15);
        let near = guided_state(&g, 1.0 + 1e-15).unwrap();
        assert!(near.momentum.norm() < 1e-7);
        assert!(matches!(
            guided_state(&g, 0.5),
            Err(Error::BelowCutoff { .. })
        ));
    }

    #[test]
    fn velocity_examples() {
        let g = WaveguideSpec::axial(PI, 1.0).unwrap();
        let s = guided_state(&g, 2.0).unwrap();
        let v = velocities(&s);
        assert!((v.group.norm() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((v.phase.magnitude() - 2.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((v.product().unwrap() - 1.0).abs() < 1e-12);
        assert!((relativistic_energy(s.mass, &v.group) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn phase_velocity_diverges_at_rest() {
        let rest = GuidedPhotonState {
            energy: 1.0,
            momentum: Vec3::zeros(),
            mass: 1.0,
        };
        let v = velocities(&rest);
        assert_eq!(v.phase, PhaseVelocity::Divergent);
        assert_eq!(v.phase.magnitude(), f64::INFINITY);
        assert_eq!(v.product(), None);
    }

    #[test]
    fn frame_basis_axial_limit() {
        let f = frame_basis(&Vec3::new(0.0, 0.0, 3.0)).unwrap();
        assert_eq!((f.e1, f.e2, f.e3), (Vec3::x(), Vec3::y(), Vec3::z()));
        // continuity as p approaches the axis
        let near = frame_basis(&Vec3::new(1e-9, -2e-9, 3.0)).unwrap();
        assert!((near.e1 - Vec3::x()).norm() < 1e-8);
        assert!((near.e2 - Vec3::y()).norm() < 1e-8);
        let anti = frame_basis(&Vec3::new(0.0, 0.0, -2.0)).unwrap();
        assert_eq!(anti.e1.cross(&anti.e2), anti.e3);
        assert!(frame_basis(&Vec3::zeros()).is_err());
    }

    #[test]
    fn frame_basis_matches_rational_form() {
        // direct evaluation of the rational expressions off-axis
        let p = Vec3::new(0.4, -1.1, 0.9);
        let n = p.norm();
        let rho2 = p[0] * p[0] + p[1] * p[1];
        let e1 = Vec3::new(
            (p[0] * p[0] * p[2] + p[1] * p[1] * n) / (n * rho2),
            (p[0] * p[1] * p[2] - p[0] * p[1] * n) / (n * rho2),
            -p[0] / n,
        );
        let e2 = Vec3::new(
            (p[0] * p[1] * p[2] - p[0] * p[1] * n) / (n * rho2),
            (p[1] * p[1] * p[2] + p[0] * p[0] * n) / (n * rho2),
            -p[1] / n,
        );
        let f = frame_basis(&p).unwrap();
        assert!((f.e1 - e1).norm() < 1e-14);
        assert!((f.e2 - e2).norm() < 1e-14);
    }

    #[test]
    fn frame_basis_diagonal() {
        let p = Vec3::new(1.0, 1.0, 1.0) / 3f64.sqrt() * 5.0;
        let f = frame_basis(&p).unwrap();
        for (a, b) in [(f.e1, f.e2), (f.e1, f.e3), (f.e2, f.e3)] {
            assert!(a.dot(&b).abs() < 1e-12);
        }
        for e in [f.e1, f.e2, f.e3] {
            assert!((e.norm() - 1.0).abs() < 1e-12);
        }
        let det = nalgebra::Matrix3::from_columns(&[f.e1, f.e2, f.e3]).determinant();
        assert!((det - 1.0).abs() < 1e-12);
    }

    #[test]
    fn decomposition_example_along_z() {
        let g = WaveguideSpec::axial(PI, 1.0).unwrap();
        let mode = ModeIndex::lowest();
        let k = g.photon_momentum(mode, 3f64.sqrt());
        assert!((k.t - 2.0).abs() < 1e-15);
        let d = decompose_momentum(&k, &g, mode).unwrap();
        assert!((d.longitudinal.t - 2.0).abs() < 1e-15);
        assert!((d.longitudinal.x - Vec3::new(0.0, 0.0, 3f64.sqrt())).norm() < 1e-15);
        assert_eq!(d.transverse.t, 0.0);
        assert!(d.longitudinal.dot(&d.transverse).abs() < 1e-12);
        assert!((d.longitudinal.interval() - 1.0).abs() < 1e-12);
        assert!((d.transverse.interval() + 1.0).abs() < 1e-12);
        assert!((d.eta.interval() + 1.0).abs() < 1e-12);

        let rest = decompose_momentum(&g.photon_momentum(mode, 0.0), &g, mode).unwrap();
        assert_eq!(rest.longitudinal, FourVector::new(1.0, Vec3::zeros()));
    }

    #[test]
    fn decomposition_errors() {
        let g = WaveguideSpec::axial(PI, 1.0).unwrap();
        let mode = ModeIndex::lowest();
        let timelike = FourVector::from_components(3.0, 1.0, 0.0, 0.0);
        assert!(decompose_momentum(&timelike, &g, mode).is_err());
        let wrong_mode = FourVector::from_components(2.0f64.sqrt() * 2.0, 2.0, 0.0, 2.0);
        assert!(decompose_momentum(&wrong_mode, &g, mode).is_err());
    }

    #[test]
    fn position_decomposition_example() {
        let g = WaveguideSpec::axial(2.0, 1.0).unwrap();
        let x = FourVector::from_components(5.0, 1.0, 2.0, 3.0);
        let d = decompose_position(&x, &g);
        assert_eq!(d.transverse, FourVector::from_components(0.0, 1.0, 2.0, 0.0));
        assert_eq!(d.longitudinal, FourVector::from_components(5.0, 0.0, 0.0, 3.0));
        let perp = decompose_position(&FourVector::from_components(2.0, 1.0, -1.0, 0.0), &g);
        assert_eq!(perp.longitudinal, FourVector::from_components(2.0, 0.0, 0.0, 0.0));
        assert_eq!(d.transverse.dot(&d.longitudinal), 0.0);
    }

    #[test]
    fn compton_examples() {
        assert_eq!(compton_wavelength(PI).unwrap(), 1.0 / PI);
        assert_eq!(compton_wavelength(1.0).unwrap(), 1.0);
        assert!(compton_wavelength(0.0).is_err());
        let a = WaveguideSpec::axial(1.0, 0.5).unwrap();
        let b = WaveguideSpec::axial(2.0, 0.5).unwrap();
        let la = compton_wavelength(a.effective_mass()).unwrap();
        let lb = compton_wavelength(b.effective_mass()).unwrap();
        assert!((lb - 2.0 * la).abs() < 1e-15);
    }
}
