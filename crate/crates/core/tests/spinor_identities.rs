use evanesce_core::spinor::{
    amplitude_spinor, beta_dot, chi_spectrum, fields_to_spinor, generators, max_abs_entry,
    omega_identity_check, polarization_basis, spin_sum, spin_sum_closed_form, spinor_to_fields,
    Matrix6,
};
use evanesce_core::{Branch, Helicity, Vec3, WaveVector};
use nalgebra::Matrix3;
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn wave_vector() -> impl Strategy<Value = Vec3> {
    (
        -10.0f64..10.0,
        -10.0f64..10.0,
        -10.0f64..10.0,
        prop::sample::select(vec![1e-3, 1.0, 1e3]),
    )
        .prop_filter("nonzero", |(a, b, c, _)| a * a + b * b + c * c > 1e-6)
        .prop_map(|(a, b, c, s)| Vec3::new(a, b, c) * s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn polarization_orthonormal_and_complete(k in wave_vector()) {
        let pol = polarization_basis(&WaveVector::new(k)).unwrap();
        for a in Helicity::ALL {
            for b in Helicity::ALL {
                let ip = pol.get(a).dotc(pol.get(b));
                let want = if a == b { 1.0 } else { 0.0 };
                prop_assert!((ip - Complex64::from(want)).norm() < TOL);
            }
        }
        let sum = pol.projector(&Helicity::ALL);
        prop_assert!((sum - Matrix3::identity()).iter().all(|c| c.norm() < TOL));
        prop_assert!((pol.plus - pol.minus.map(|c| c.conj())).norm() == 0.0);
        let khat = k / k.norm();
        prop_assert!((pol.zero.map(|c| c.re) - khat).norm() < 1e-15);
    }

    #[test]
    fn spin_sum_matches_closed_form(k in wave_vector()) {
        let wv = WaveVector::new(k);
        let closed = spin_sum_closed_form(&wv).unwrap();
        for branch in [Branch::Positive, Branch::Negative] {
            let explicit = spin_sum(&wv, branch).unwrap();
            prop_assert!(max_abs_entry(&(explicit - closed)) < TOL);
        }
    }

    #[test]
    fn omega_identity_holds(k in wave_vector(), omega in -20.0f64..20.0) {
        let scale = (omega * omega + k.norm_squared()).max(1.0);
        prop_assert!(omega_identity_check(omega, &k) < TOL * scale);
    }

    #[test]
    fn chi_spectrum_is_plus_minus_zero(k in wave_vector()) {
        let n = k.norm();
        let want = [n, n, 0.0, 0.0, -n, -n];
        let got = chi_spectrum(&k);
        for (g, w) in got.iter().zip(want) {
            prop_assert!((g - w).abs() < 1e-10 * n, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn amplitude_spinors_solve_wave_equation(k in wave_vector()) {
        let wv = WaveVector::new(k);
        let n = k.norm();
        for branch in [Branch::Positive, Branch::Negative] {
            for h in Helicity::TRANSVERSE {
                let u = amplitude_spinor(&wv, h, branch).unwrap();
                prop_assert!((u.norm() - 1.0).abs() < TOL);
                let res = (beta_dot(n, &k) * u.as_vector()).norm();
                prop_assert!(res < TOL * n);
            }
            let u0 = amplitude_spinor(&wv, Helicity::Zero, branch).unwrap();
            prop_assert!((beta_dot(0.0, &k) * u0.as_vector()).norm() < TOL * n);
        }
    }

    #[test]
    fn field_round_trip(e in prop::array::uniform3(-5.0f64..5.0), b in prop::array::uniform3(-5.0f64..5.0)) {
        let e = Vec3::from(e);
        let b = Vec3::from(b);
        let psi = fields_to_spinor(&e, &b);
        let (e2, b2) = spinor_to_fields(&psi);
        prop_assert!((e2 - e).norm() < 1e-14 && (b2 - b).norm() < 1e-14);
        let energy = (e.norm_squared() + b.norm_squared()) / 2.0;
        prop_assert!((psi.norm().powi(2) - energy).abs() < 1e-12 * energy.max(1.0));
    }
}

#[test]
fn generator_structure() {
    let g = generators();
    let s2: Matrix6 = g.spin.iter().map(|s| s * s).sum();
    assert_eq!(s2, Matrix6::identity() * Complex64::from(2.0));
    for c in &g.chi {
        assert_eq!(*c, c.adjoint());
    }
    for s in &g.spin {
        assert_eq!(*s, s.adjoint());
    }
    assert_eq!(g.beta0 * g.beta0, Matrix6::identity());
}

#[test]
fn helicity_is_spin_along_k() {
    let k = Vec3::new(0.3, -1.2, 0.7);
    let pol = polarization_basis(&WaveVector::new(k)).unwrap();
    let tk: Matrix3<Complex64> = (0..3)
        .map(|i| evanesce_core::spinor::tau(i) * Complex64::from(k[i]))
        .sum();
    for h in Helicity::ALL {
        let e = pol.get(h);
        let lhs = tk * e;
        let rhs = e * Complex64::from(h.value() * k.norm());
        assert!((lhs - rhs).norm() < 1e-13, "{h:?}");
    }
}

#[test]
fn zero_wave_vector_rejected() {
    let z = WaveVector::new(Vec3::zeros());
    assert!(polarization_basis(&z).is_err());
    assert!(amplitude_spinor(&z, Helicity::Plus, Branch::Positive).is_err());
    assert!(spin_sum(&z, Branch::Positive).is_err());
}
