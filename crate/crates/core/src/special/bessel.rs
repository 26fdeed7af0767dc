//! Integer-order Bessel functions of orders 0 and 1 for positive real
//! arguments.
//!
//! * `J`, `Y`: Miller backward recurrence normalized by
//!   `J0 + 2 sum J_2k = 1`, with `Y0`, `Y1` from the Neumann series, for
//!   `x <= 25`; Hankel asymptotic series above.
//! * `I`: power series below 30, asymptotic series above.
//! * `K`: logarithmic series below 2, Steed's continued fraction above.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const JY_ASYMPTOTIC_FROM: f64 = 25.0;
const I_ASYMPTOTIC_FROM: f64 = 30.0;
const K_SERIES_UP_TO: f64 = 2.0;
const RESCALE_ABOVE: f64 = 1e250;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JY01 {
    pub j0: f64,
    pub j1: f64,
    pub y0: f64,
    pub y1: f64,
}

/// `J0, J1, Y0, Y1` at `x > 0`.
pub fn bessel_jy01(x: f64) -> JY01 {
    debug_assert!(x > 0.0);
    if x > JY_ASYMPTOTIC_FROM {
        jy_asymptotic(x)
    } else {
        jy_miller(x)
    }
}

fn jy_miller(x: f64) -> JY01 {
    let start = 2 * (((x + 30.0 + 10.0 * x.cbrt()) / 2.0).ceil() as usize);
    let mut j = vec![0.0f64; start + 2];
    j[start] = 1e-300;
    for n in (1..=start).rev() {
        j[n - 1] = 2.0 * n as f64 / x * j[n] - j[n + 1];
        if j[n - 1].abs() > RESCALE_ABOVE {
            let scale = 1.0 / RESCALE_ABOVE;
            for v in &mut j[n - 1..] {
                *v *= scale;
            }
        }
    }
    let norm = j[0] + 2.0 * j.iter().skip(2).step_by(2).sum::<f64>();
    for v in &mut j {
        *v /= norm;
    }

    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut y0_sum = 0.0;
    let mut y1_sum = 0.0;
    let mut k = 1;
    while 2 * k < start {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let kf = k as f64;
        y0_sum += sign * j[2 * k] / kf;
        y1_sum += sign * (j[2 * k - 1] - j[2 * k + 1]) / kf;
        k += 1;
    }
    let y0 = 2.0 / PI * log_term * j[0] - 4.0 / PI * y0_sum;
    let y1 = 2.0 / PI * (log_term * j[1] - j[0] / x) + 2.0 / PI * y1_sum;
    JY01 {
        j0: j[0],
        j1: j[1],
        y0,
        y1,
    }
}

/// Coefficient `a_k(nu)` of the Hankel expansion, built up incrementally.
fn hankel_terms(nu: f64, x: f64) -> (f64, f64) {
    // P - iQ style sums: returns (sum of even terms with sign, sum of odd terms with sign)
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (kf * 8.0 * x);
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        // H2 ~ sum (-i)^k a_k / x^k ; J = Re, Y = -Im after the phase factor
        match k % 4 {
            1 => q -= term,
            2 => p -= term,
            3 => q += term,
            _ => p += term,
        }
        if term.abs() < 1e-17 * p.abs() {
            break;
        }
    }
    (p, q)
}

fn jy_asymptotic(x: f64) -> JY01 {
    let amp = (2.0 / (PI * x)).sqrt();
    let mut out = [(0.0, 0.0); 2];
    for (nu, slot) in out.iter_mut().enumerate() {
        let (p, q) = hankel_terms(nu as f64, x);
        // sum = p + i q multiplies exp(-i phase); H2 = J - iY
        let phase = x - nu as f64 * FRAC_PI_2 - FRAC_PI_4;
        let (s, c) = phase.sin_cos();
        let re = p * c + q * s;
        let im = q * c - p * s;
        *slot = (amp * re, -amp * im);
    }
    JY01 {
        j0: out[0].0,
        y0: out[0].1,
        j1: out[1].0,
        y1: out[1].1,
    }
}

fn i_series(nu: u32, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = (0.5 * x).powi(nu as i32);
    for k in 1..=nu {
        term /= k as f64;
    }
    let mut sum = term;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + nu as f64));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
        k += 1.0;
    }
    sum
}

fn i_asymptotic(nu: u32, x: f64) -> f64 {
    let mu = 4.0 * f64::from(nu * nu);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= -(mu - odd * odd) / (kf * 8.0 * x);
        if term.abs() >= prev || term.abs() < 1e-17 {
            break;
        }
        prev = term.abs();
        sum += term;
    }
    x.exp() / (2.0 * PI * x).sqrt() * sum
}

pub fn bessel_i0(x: f64) -> f64 {
    if x.abs() > I_ASYMPTOTIC_FROM {
        i_asymptotic(0, x.abs())
    } else {
        i_series(0, x)
    }
}

/// Unchecked `I1`; see [`crate::special::bessel_i1`] for the validated entry.
pub fn bessel_i1_raw(x: f64) -> f64 {
    if x > I_ASYMPTOTIC_FROM {
        i_asymptotic(1, x)
    } else {
        i_series(1, x)
    }
}

fn k_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let log_term = (0.5 * x).ln();
    // K0 = -(ln(x/2) + gamma) I0 + sum H_k q^k / (k!)^2
    let mut t0 = 1.0;
    let mut h = 0.0;
    let mut s0 = 0.0;
    // K1 tail: sum (psi(k+1) + psi(k+2)) q^k / (k! (k+1)!)
    let mut t1 = 1.0;
    let mut s1 = -2.0 * EULER_GAMMA + 1.0;
    let mut k = 1.0;
    loop {
        t0 *= q / (k * k);
        t1 *= q / (k * (k + 1.0));
        h += 1.0 / k;
        let psi_sum = -2.0 * EULER_GAMMA + 2.0 * h + 1.0 / (k + 1.0);
        s0 += h * t0;
        s1 += psi_sum * t1;
        if t0 < 1e-18 && t1 < 1e-18 {
            break;
        }
        k += 1.0;
    }
    let k0 = -(log_term + EULER_GAMMA) * bessel_i0(x) + s0;
    let k1 = 1.0 / x + log_term * bessel_i1_raw(x) - 0.25 * x * s1;
    (k0, k1)
}

/// Steed's continued fraction (CF2) for `K0`, `K1` at `x >= 2`.
fn k_continued_fraction(x: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// `(K0(x), K1(x))` at `x > 0`.
pub fn bessel_k01(x: f64) -> (f64, f64) {
    debug_assert!(x > 0.0);
    if x <= K_SERIES_UP_TO {
        k_series(x)
    } else {
        k_continued_fraction(x)
    }
}
