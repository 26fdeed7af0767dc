//! Photon wave mechanics in a rectangular waveguide.
//!
//! * [`spinor`]: the six-component photon spinor built from `(E, iB)`, its
//!   spin matrices, polarization basis and spin sums.
//! * [`waveguide`]: mode cutoffs, the massive dispersion of guided photons
//!   and their transverse/longitudinal decomposition.
//! * [`special`]: Hankel and modified Bessel functions of orders 0 and 1.
//! * [`propagator`]: scalar propagators of the guided photon, with
//!   quadrature oracles and a decay-length fit.
//!
//! Natural units (`hbar = c = 1`) and metric signature `(+, -, -, -)`
//! throughout.

pub mod error;
pub mod minkowski;
pub mod propagator;
pub mod quadrature;
pub mod special;
pub mod spinor;
pub mod waveguide;

pub use error::{Error, Result};
pub use minkowski::{FourVector, Vec3};
pub use propagator::fit::{decay_length_fit, DecayFit, DecayModel};
pub use propagator::oracle::{s1_oracle, s1_oracle_1d, s2_oracle, QuadratureConfig};
pub use propagator::{
    d_massless, s1_closed, s1_closed_1d, s2_closed, s2_full_closed, PropagatorValue, Regime,
    Separation, Variant,
};
pub use special::{bessel_i1, hankel2, hankel2_negimag, HankelArg, HankelKind};
pub use spinor::{Branch, Helicity, Spinor6, WaveVector};
pub use waveguide::{GuidedPhotonState, ModeIndex, WaveguideSpec};
