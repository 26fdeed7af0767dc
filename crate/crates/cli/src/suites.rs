//! Identity and oracle suites behind `evanesce verify`.
//!
//! Each suite yields [`Check`] rows: one identity, the worst residual seen
//! over its trials and the tolerance it is held to. Randomized suites draw
//! from a ChaCha stream seeded per suite, so filtering suites does not
//! change the draws of the others.

use std::f64::consts::PI;

use evanesce_core::propagator::oracle::s1_oracle_1d;
use evanesce_core::special::integral::{
    bessel_i1_quadrature, hankel2_negimag_quadrature, hankel2_quadrature, negimag_recurrence,
    real_recurrence,
};
use evanesce_core::special::{bessel_i1, hankel2, hankel2_negimag};
use evanesce_core::spinor::{
    amplitude_spinor, beta_dot, chi_spectrum, fields_to_spinor, generators, max_abs_entry,
    omega_identity_check, polarization_basis, spin_sum, spin_sum_closed_form, spinor_to_fields,
    Matrix6,
};
use evanesce_core::waveguide::{
    decompose_momentum, decompose_position, guided_state, relativistic_energy, velocities,
};
use evanesce_core::{
    d_massless, decay_length_fit, s1_closed, s1_closed_1d, s1_oracle, s2_closed, s2_full_closed,
    s2_oracle, Branch, DecayModel, FourVector, Helicity, ModeIndex, QuadratureConfig,
    Separation, Vec3, WaveVector, WaveguideSpec,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub algebra: f64,
    pub eigen: f64,
    pub kinematics: f64,
    pub special: f64,
    pub oracle: f64,
    pub fit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            algebra: 1e-12,
            eigen: 1e-10,
            kinematics: 1e-10,
            special: 1e-8,
            oracle: 1e-3,
            fit: 0.02,
        }
    }
}

/// Fixed tolerances that are not user-tunable.
pub const ENVELOPE_TOL: f64 = 5e-3;
pub const MASSLESS_MATCH_TOL: f64 = 1e-4;
pub const POWER_LAW_TOL: f64 = 0.01;
pub const I1_TOL: f64 = 1e-10;
pub const S2_ORACLE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Algebra,
    Eigen,
    Kinematics,
    Special,
    Oracle,
    Structure,
    Fit,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Algebra,
        Suite::Eigen,
        Suite::Kinematics,
        Suite::Special,
        Suite::Oracle,
        Suite::Structure,
        Suite::Fit,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Eigen => "eigen",
            Suite::Kinematics => "kinematics",
            Suite::Special => "special",
            Suite::Oracle => "oracle",
            Suite::Structure => "structure",
            Suite::Fit => "fit",
        }
    }

    fn stream(&self) -> u64 {
        *self as u64 + 1
    }
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .iter()
            .find(|x| x.name() == s.trim())
            .copied()
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub identity: &'static str,
    pub trials: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_residual.is_finite() && self.max_residual <= self.tolerance
    }
}

/// Accumulates the worst residual of one identity.
struct Acc {
    suite: Suite,
    identity: &'static str,
    tolerance: f64,
    trials: usize,
    worst: f64,
    note: Option<String>,
}

impl Acc {
    fn new(suite: Suite, identity: &'static str, tolerance: f64) -> Self {
        Self {
            suite,
            identity,
            tolerance,
            trials: 0,
            worst: 0.0,
            note: None,
        }
    }

    fn add(&mut self, residual: f64) {
        self.trials += 1;
        // NaN must poison the result
        if residual.is_nan() || residual > self.worst {
            self.worst = if residual.is_nan() { f64::INFINITY } else { residual };
        }
    }

    fn add_result(&mut self, r: evanesce_core::Result<f64>) {
        match r {
            Ok(v) => self.add(v),
            Err(e) => {
                self.trials += 1;
                self.worst = f64::INFINITY;
                self.note.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn finish(self) -> Check {
        Check {
            suite: self.suite,
            identity: self.identity,
            trials: self.trials,
            max_residual: self.worst,
            tolerance: self.tolerance,
            note: self.note,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: usize,
    pub tol: Tolerances,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 42,
            trials: 1000,
            tol: Tolerances::default(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(suite.stream());
    match suite {
        Suite::Algebra => algebra(&mut rng, opts),
        Suite::Eigen => eigen(&mut rng, opts),
        Suite::Kinematics => kinematics(&mut rng, opts),
        Suite::Special => special(&opts.tol),
        Suite::Oracle => oracle(&opts.tol),
        Suite::Structure => structure(&mut rng, opts),
        Suite::Fit => fit(&opts.tol),
    }
}

pub fn run_all(suites: &[Suite], opts: &SuiteOptions) -> Vec<Check> {
    suites.iter().flat_map(|s| run_suite(*s, opts)).collect()
}

/// Random wave vector with log-uniform magnitude in `[1e-3, 1e3]`.
pub fn random_wave_vector<R: Rng>(rng: &mut R) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n * 10f64.powf(rng.gen_range(-3.0..3.0));
        }
    }
}

fn eye3_residual<M>(m: &M) -> f64
where
    M: std::ops::Index<(usize, usize), Output = Complex64>,
{
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((m[(i, j)] - Complex64::from(want)).norm());
        }
    }
    worst
}

fn algebra<R: Rng>(rng: &mut R, opts: &SuiteOptions) -> Vec<Check> {
    let tol = opts.tol.algebra;
    let s = Suite::Algebra;
    let mut ortho = Acc::new(s, "polarization orthonormality", tol);
    let mut complete = Acc::new(s, "polarization completeness", tol);
    let mut conj = Acc::new(s, "eps(+1) = conj eps(-1)", tol);
    let mut longi = Acc::new(s, "eps(0) = k/|k|", tol);
    let mut sum_f = Acc::new(s, "spin sum f fbar = (beta.k/2w) I_perp", tol);
    let mut sum_g = Acc::new(s, "spin sum g gbar = (beta.k/2w) I_perp", tol);
    let mut omega = Acc::new(s, "(beta.k)^2 = k^2 I + Omega(k)", tol);
    let mut wave = Acc::new(s, "transverse spinors solve (w beta0 - beta.k) u = 0", tol);
    let mut wave0 = Acc::new(s, "longitudinal spinor solves it at w = 0", tol);
    let mut unit = Acc::new(s, "amplitude spinors unit norm", tol);
    let mut round = Acc::new(s, "fields <-> spinor round trip", tol);

    for _ in 0..opts.trials {
        let k = random_wave_vector(rng);
        let wv = WaveVector::new(k);
        let n = k.norm();
        match polarization_basis(&wv) {
            Ok(pol) => {
                let mut w = 0.0f64;
                for a in Helicity::ALL {
                    for b in Helicity::ALL {
                        let want = if a == b { 1.0 } else { 0.0 };
                        w = w.max((pol.get(a).dotc(pol.get(b)) - Complex64::from(want)).norm());
                    }
                }
                ortho.add(w);
                complete.add(eye3_residual(&pol.projector(&Helicity::ALL)));
                conj.add((pol.plus - pol.minus.map(|c| c.conj())).norm());
                longi.add((pol.zero.map(|c| c.re) - k / n).norm() + pol.zero.map(|c| c.im).norm());
            }
            Err(e) => {
                for a in [&mut ortho, &mut complete, &mut conj, &mut longi] {
                    a.add_result(Err(e.clone()));
                }
            }
        }
        let closed = spin_sum_closed_form(&wv);
        for (acc, branch) in [(&mut sum_f, Branch::Positive), (&mut sum_g, Branch::Negative)] {
            let r = closed
                .clone()
                .and_then(|c| spin_sum(&wv, branch).map(|e| max_abs_entry(&(e - c))));
            acc.add_result(r);
        }
        let w: f64 = rng.gen_range(-1.0..1.0) * 10f64.powf(rng.gen_range(-3.0..3.0));
        omega.add(omega_identity_check(w, &k) / (w * w + n * n).max(1.0));
        for branch in [Branch::Positive, Branch::Negative] {
            for h in Helicity::TRANSVERSE {
                wave.add_result(amplitude_spinor(&wv, h, branch).map(|u| {
                    unit.add((u.norm() - 1.0).abs());
                    (beta_dot(n, &k) * u.as_vector()).norm() / n
                }));
            }
            wave0.add_result(
                amplitude_spinor(&wv, Helicity::Zero, branch)
                    .map(|u| (beta_dot(0.0, &k) * u.as_vector()).norm() / n),
            );
        }
        let e = Vec3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let b = Vec3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let psi = fields_to_spinor(&e, &b);
        let (e2, b2) = spinor_to_fields(&psi);
        let energy = (e.norm_squared() + b.norm_squared()) / 2.0;
        round.add(
            ((e2 - e).norm() + (b2 - b).norm()) / (1.0 + e.norm() + b.norm())
                + (psi.norm().powi(2) - energy).abs() / energy.max(1.0),
        );
    }

    let g = generators();
    let mut gens = Acc::new(s, "S.S = 2 I, chi and S Hermitian, beta0^2 = I", tol);
    let s2: Matrix6 = g.spin.iter().map(|m| m * m).sum();
    let mut r = max_abs_entry(&(s2 - Matrix6::identity() * Complex64::from(2.0)));
    for m in g.chi.iter().chain(&g.spin) {
        r = r.max(max_abs_entry(&(m - m.adjoint())));
    }
    r = r.max(max_abs_entry(&(g.beta0 * g.beta0 - Matrix6::identity())));
    gens.add(r);

    [
        gens, ortho, complete, conj, longi, sum_f, sum_g, omega, wave, wave0, unit, round,
    ]
    .into_iter()
    .map(Acc::finish)
    .collect()
}

fn eigen<R: Rng>(rng: &mut R, opts: &SuiteOptions) -> Vec<Check> {
    let mut acc = Acc::new(
        Suite::Eigen,
        "spectrum of chi.k is {+|k|, +|k|, 0, 0, -|k|, -|k|}",
        opts.tol.eigen,
    );
    for _ in 0..opts.trials {
        let k = random_wave_vector(rng);
        let n = k.norm();
        let want = [n, n, 0.0, 0.0, -n, -n];
        let got = chi_spectrum(&k);
        let r = got
            .iter()
            .zip(want)
            .map(|(g, w)| (g - w).abs() / n)
            .fold(0.0, f64::max);
        acc.add(r);
    }
    vec![acc.finish()]
}

fn random_guide<R: Rng>(rng: &mut R) -> WaveguideSpec {
    let b1 = rng.gen_range(0.5..5.0);
    let b2 = b1 * rng.gen_range(0.1..0.99);
    loop {
        let o = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if o.norm() > 1e-3 {
            return WaveguideSpec::new(b1, b2, o).expect("valid by construction");
        }
    }
}

fn kinematics<R: Rng>(rng: &mut R, opts: &SuiteOptions) -> Vec<Check> {
    let tol = opts.tol.kinematics;
    let s = Suite::Kinematics;
    let mut disp = Acc::new(s, "E^2 = p^2 + m^2", tol);
    let mut vgvp = Acc::new(s, "v_g . v_p = 1", tol);
    let mut energy = Acc::new(s, "E = m / sqrt(1 - v_g^2)", tol);
    let mut orth = Acc::new(s, "p_L . p_T = 0", tol);
    let mut pt2 = Acc::new(s, "p_T^2 = -m^2", tol);
    let mut pl2 = Acc::new(s, "p_L^2 = m^2", tol);
    let mut k2 = Acc::new(s, "k^2 = 0", tol);
    let mut eta = Acc::new(s, "eta^2 = -1", tol);
    let mut phase = Acc::new(s, "k.x = p_T.x_T + p_L.x_L", tol);

    for _ in 0..opts.trials {
        let spec = random_guide(rng);
        let m = spec.lowest_cutoff();
        let excess = 10f64.powf(rng.gen_range(-3.0..1.5));
        match guided_state(&spec, m * (1.0 + excess)) {
            Ok(st) => {
                disp.add(st.dispersion_residual().abs() / (st.energy * st.energy));
                let v = velocities(&st);
                vgvp.add(v.product().map_or(f64::INFINITY, |p| (p - 1.0).abs()));
                energy.add((relativistic_energy(m, &v.group) / st.energy - 1.0).abs());
            }
            Err(e) => {
                for a in [&mut disp, &mut vgvp, &mut energy] {
                    a.add_result(Err(e.clone()));
                }
            }
        }

        let mode = ModeIndex::new(rng.gen_range(1..4), rng.gen_range(0..4)).expect("r >= 1");
        let k = spec.photon_momentum(mode, rng.gen_range(-20.0..20.0));
        let x = FourVector::from_components(
            rng.gen_range(-100.0..100.0),
            rng.gen_range(-100.0..100.0),
            rng.gen_range(-100.0..100.0),
            rng.gen_range(-100.0..100.0),
        );
        match decompose_momentum(&k, &spec, mode) {
            Ok(d) => {
                let scale = k.euclidean_norm_squared();
                let m2 = d.mass * d.mass;
                orth.add(d.longitudinal.dot(&d.transverse).abs() / scale);
                pt2.add((d.transverse.interval() + m2).abs() / scale);
                pl2.add((d.longitudinal.interval() - m2).abs() / scale);
                k2.add(k.interval().abs() / scale);
                eta.add((d.eta.interval() + 1.0).abs());
                let xd = decompose_position(&x, &spec);
                let whole = k.dot(&x);
                let split =
                    d.transverse.dot(&xd.transverse) + d.longitudinal.dot(&xd.longitudinal);
                phase.add((whole - split).abs() / (whole.abs() + 1.0));
            }
            Err(e) => {
                for a in [&mut orth, &mut pt2, &mut pl2, &mut k2, &mut eta, &mut phase] {
                    a.add_result(Err(e.clone()));
                }
            }
        }
    }
    [disp, vgvp, energy, orth, pt2, pl2, k2, eta, phase]
        .into_iter()
        .map(Acc::finish)
        .collect()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

pub const HANKEL_ORACLE_POINTS: [f64; 5] = [0.5, 1.0, 2.0, 5.0, 10.0];

fn special(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Special;
    let mut h0 = Acc::new(s, "H0(z) vs contour quadrature", tol.special);
    let mut h1 = Acc::new(s, "H1(z) vs contour quadrature", tol.special);
    for z in HANKEL_ORACLE_POINTS {
        h0.add_result((|| Ok(rel(hankel2(0, z)?, hankel2_quadrature(0, z)?)))());
        h1.add_result((|| Ok(rel(hankel2(1, z)?, hankel2_quadrature(1, z)?)))());
    }
    let mut neg = Acc::new(s, "H_nu(-is) vs rotated contour", tol.special);
    for sv in [0.5, 1.0, 3.0, 8.0, 15.0] {
        for nu in [0, 1] {
            neg.add_result((|| Ok(rel(hankel2_negimag(nu, sv)?, hankel2_negimag_quadrature(nu, sv)?)))());
        }
    }
    let mut rec = Acc::new(s, "H1 = -dH0/dz by finite differences", tol.special.max(1e-6));
    for i in 0..=15 {
        let z = 0.5 + 19.5 * i as f64 / 15.0;
        rec.add_result((|| Ok(rel(real_recurrence(|x| hankel2(0, x), z)?, hankel2(1, z)?)))());
    }
    rec.add_result((|| {
        Ok(rel(
            negimag_recurrence(|x| hankel2_negimag(0, x), 3.0)?,
            hankel2_negimag(1, 3.0)?,
        ))
    })());
    let mut env = Acc::new(s, "|H_nu(z)| sqrt(z) -> sqrt(2/pi) for z >= 40", ENVELOPE_TOL);
    for z in [40.0, 50.0, 80.0, 150.0, 400.0] {
        for nu in [0, 1] {
            env.add_result(hankel2(nu, z).map(|h| (h.norm() * z.sqrt() / (2.0 / PI).sqrt() - 1.0).abs()));
        }
    }
    let mut i1 = Acc::new(s, "I1(x) vs integral representation", I1_TOL.min(tol.special));
    for x in [0.1, 1.0, 5.0, 10.0, 25.0, 40.0] {
        i1.add_result((|| {
            let q = bessel_i1_quadrature(x)?;
            Ok((bessel_i1(x)? - q).abs() / q)
        })());
    }
    [h0, h1, neg, rec, env, i1].into_iter().map(Acc::finish).collect()
}

/// Ten timelike and ten spacelike `(t, r)` points with proper length
/// log-spaced over `[0.5, 8]` and rapidities cycling through
/// `0.125, 0.375, 0.625, 0.875`. No point sits on `t = 0` or `r = 0`,
/// where the evanescent integral carries a `1/r` singularity.
pub fn oracle_grid() -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(20);
    for timelike in [true, false] {
        for i in 0..10 {
            let s = 0.5 * 16f64.powf(i as f64 / 9.0);
            let eta = 0.125 + 0.25 * (i % 4) as f64;
            let (a, b) = (s * eta.cosh(), s * eta.sinh());
            pts.push(if timelike { (a, b) } else { (b, a) });
        }
    }
    pts
}

/// Worst relative deviation of `closed` from `oracle` over the grid.
pub fn grid_residual<C, O>(grid: &[(f64, f64)], closed: C, oracle: O) -> (f64, Option<String>)
where
    C: Fn(&Separation) -> evanesce_core::Result<Complex64> + Sync,
    O: Fn(f64, f64) -> evanesce_core::Result<Complex64> + Sync,
{
    let results: Vec<evanesce_core::Result<f64>> = grid
        .par_iter()
        .map(|&(t, r)| {
            let sep = Separation::new(t, r)?;
            Ok(rel(closed(&sep)?, oracle(t, r)?))
        })
        .collect();
    let mut worst = 0.0f64;
    let mut note = None;
    for r in results {
        match r {
            Ok(v) => worst = if v.is_nan() { f64::INFINITY } else { worst.max(v) },
            Err(e) => {
                worst = f64::INFINITY;
                note.get_or_insert_with(|| e.to_string());
            }
        }
    }
    (worst, note)
}

fn grid_check<C, O>(identity: &'static str, tol: f64, grid: &[(f64, f64)], closed: C, oracle: O) -> Check
where
    C: Fn(&Separation) -> evanesce_core::Result<Complex64> + Sync,
    O: Fn(f64, f64) -> evanesce_core::Result<Complex64> + Sync,
{
    let (worst, note) = grid_residual(grid, closed, oracle);
    Check {
        suite: Suite::Oracle,
        identity,
        trials: grid.len(),
        max_residual: worst,
        tolerance: tol,
        note,
    }
}

fn oracle(tol: &Tolerances) -> Vec<Check> {
    let cfg = QuadratureConfig::default();
    let grid = oracle_grid();
    let s1 = grid_check(
        "S1 closed form vs damped momentum integral",
        tol.oracle,
        &grid,
        |sep| Ok(s1_closed(sep, 1.0)?.value),
        |t, r| s1_oracle(t, r, 1.0, &cfg),
    );
    let grid_1d = [(0.0, 2.0), (0.5, 3.0), (3.0, 1.0), (6.0, 2.0)];
    let s1d = grid_check(
        "S1 one-dimensional closed form vs momentum integral",
        tol.oracle,
        &grid_1d,
        |sep| Ok(s1_closed_1d(sep, 1.0)?.value),
        |t, r| s1_oracle_1d(t, r, 1.0, &cfg),
    );
    vec![s1, s1d]
}

/// The evanescent closed form against its own momentum integral, on the
/// oracle grid. Not part of `verify`: the two disagree.
pub fn s2_oracle_check() -> Check {
    let cfg = QuadratureConfig::default();
    grid_check(
        "S2 closed form vs evanescent momentum integral",
        S2_ORACLE_TOL,
        &oracle_grid(),
        |sep| Ok(s2_closed(sep, 1.0)?.value),
        |t, r| s2_oracle(t, r, 1.0, &cfg),
    )
}

fn structure<R: Rng>(rng: &mut R, opts: &SuiteOptions) -> Vec<Check> {
    let s = Suite::Structure;
    let tol = opts.tol.algebra;
    let mut half = Acc::new(s, "S2 = -S1/2", tol);
    let mut full_t = Acc::new(s, "full form = -S1 when timelike", tol);
    let mut seps = Vec::new();
    for _ in 0..opts.trials {
        let t = rng.gen_range(0.0..30.0);
        let r = rng.gen_range(0.0..30.0);
        let m = rng.gen_range(0.1..5.0);
        if let Ok(sep) = Separation::new(t, r) {
            if sep.regime() != evanesce_core::Regime::Lightlike {
                seps.push((sep, m));
            }
        }
    }
    for (sep, m) in &seps {
        half.add_result((|| {
            let a = s1_closed(sep, *m)?.value;
            let b = s2_closed(sep, *m)?.value;
            Ok((b + a / 2.0).norm() / a.norm())
        })());
        if sep.regime() == evanesce_core::Regime::Timelike {
            full_t.add_result((|| {
                let a = s1_closed(sep, *m)?.value;
                let f = s2_full_closed(sep, *m)?.value;
                Ok((f + a).norm() / a.norm())
            })());
        }
    }

    let mut growth = Acc::new(s, "full form grows at rate +omega_c", opts.tol.fit);
    for omega_c in [0.5, 1.0, 2.0] {
        growth.add_result((|| {
            let samples = spacelike_samples(s2_full_closed, omega_c, 20.0, 40.0, 41)?;
            let f = decay_length_fit(&samples, DecayModel::default())?;
            Ok((f.rate / omega_c - 1.0).abs())
        })());
    }

    let mut law = Acc::new(s, "massless limit D ~ 1/x^2", POWER_LAW_TOL);
    for (t, r) in [(0.0, 2.0), (1.0, 2.0), (3.0, 1.0)] {
        law.add_result((|| {
            let a = d_massless(&Separation::new(t, r)?)?.value;
            let b = d_massless(&Separation::new(2.0 * t, 2.0 * r)?)?.value;
            Ok(((a / b).norm() / 4.0 - 1.0).abs())
        })());
    }
    let mut limit = Acc::new(s, "S1 -> D at omega_c sqrt|x^2| = 1e-6", MASSLESS_MATCH_TOL);
    for (t, r) in oracle_grid() {
        limit.add_result((|| {
            let sep = Separation::new(t, r)?;
            let m = 1e-6 / sep.proper_length();
            Ok(rel(s1_closed(&sep, m)?.value, d_massless(&sep)?.value))
        })());
    }
    let mut mono = Acc::new(s, "spacelike |S1|, |S2| decrease beyond 2/omega_c", 0.0);
    for omega_c in [0.5, 1.0, 2.0] {
        for f in [s1_closed, s2_closed] {
            mono.add_result((|| {
                let v = spacelike_samples(f, omega_c, 2.0, 30.0, 113)?;
                Ok(v.windows(2).map(|w| (w[1].1 / w[0].1 - 1.0).max(0.0)).fold(0.0, f64::max))
            })());
        }
    }
    [half, full_t, growth, law, limit, mono]
        .into_iter()
        .map(Acc::finish)
        .collect()
}

type ClosedForm = fn(&Separation, f64) -> evanesce_core::Result<evanesce_core::PropagatorValue>;

/// `(d, |value|)` on `n` equally spaced spacelike distances spanning
/// `[lo, hi] / omega_c`.
pub fn spacelike_samples(
    f: ClosedForm,
    omega_c: f64,
    lo: f64,
    hi: f64,
    n: usize,
) -> evanesce_core::Result<Vec<(f64, f64)>> {
    (0..n)
        .map(|i| {
            let d = (lo + (hi - lo) * i as f64 / (n - 1) as f64) / omega_c;
            Ok((d, f(&Separation::spacelike(d)?, omega_c)?.value.norm()))
        })
        .collect()
}

/// Largest relative deviation of `|S1| (x^2)^(3/4)` from its mean over
/// `omega_c sqrt(x^2)` in `[20, 40]`.
pub fn timelike_envelope_spread(omega_c: f64) -> evanesce_core::Result<f64> {
    let vals = (0..=80)
        .map(|i| {
            let tau = (20.0 + 20.0 * i as f64 / 80.0) / omega_c;
            let v = s1_closed(&Separation::timelike(tau)?, omega_c)?;
            Ok(v.value.norm() * (tau * tau).powf(0.75))
        })
        .collect::<evanesce_core::Result<Vec<f64>>>()?;
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    Ok(vals.iter().fold(0.0f64, |a, v| a.max((v - mean).abs())) / mean)
}

fn fit(tol: &Tolerances) -> Vec<Check> {
    let s = Suite::Fit;
    let mut s1 = Acc::new(s, "S1 spacelike decay length = 1/omega_c", tol.fit);
    let mut s2 = Acc::new(s, "S2 spacelike decay length = 1/omega_c", tol.fit);
    for omega_c in [0.5, 1.0, 2.0] {
        for (acc, f) in [(&mut s1, s1_closed as ClosedForm), (&mut s2, s2_closed as ClosedForm)] {
            acc.add_result((|| {
                let samples = spacelike_samples(f, omega_c, 5.0, 15.0, 41)?;
                let fit = decay_length_fit(&samples, DecayModel::default())?;
                Ok((fit.lambda * omega_c - 1.0).abs())
            })());
        }
    }
    let mut env = Acc::new(s, "timelike |S1| (x^2)^(3/4) constant", tol.fit);
    for omega_c in [0.5, 1.0, 2.0] {
        env.add_result(timelike_envelope_spread(omega_c));
    }
    [s1, s2, env].into_iter().map(Acc::finish).collect()
}
