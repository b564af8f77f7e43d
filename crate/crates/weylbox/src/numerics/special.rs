//! Gamma, Riemann zeta and polylogarithm evaluations.
//!
//! Integer and half-integer gamma arguments are resolved by exact recursion
//! from `gamma(1) = 1` and `gamma(1/2) = sqrt(pi)`, so the unit-ball volumes
//! and radiation coefficients built on them are correct to the last bit of
//! the rational prefactor. General arguments fall back to the Lanczos
//! approximation. The zeta function uses Euler-Maclaurin acceleration, and
//! the polylogarithm switches between its power series and the expansion in
//! `ln z` around `z = 1`.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::{Error, Result};

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for strictly positive real arguments.
///
/// Integer and half-integer arguments are computed exactly (up to the final
/// rounding of the rational-times-sqrt(pi) value); everything else goes
/// through Lanczos.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "gamma requires x > 0, got {x}"
        )));
    }
    let two_x = 2.0 * x;
    if two_x.fract() == 0.0 && two_x <= 360.0 {
        return Ok(gamma_half_integer(two_x as u64));
    }
    Ok(gamma_lanczos(x))
}

/// Exact ladder for gamma(k/2), k >= 1.
fn gamma_half_integer(two_x: u64) -> f64 {
    // Start at gamma(1) for integers, gamma(1/2) for half-integers.
    let (mut acc, mut k) = if two_x % 2 == 0 {
        (1.0_f64, 2_u64)
    } else {
        (PI.sqrt(), 1_u64)
    };
    while k < two_x {
        acc *= k as f64 / 2.0;
        k += 2;
    }
    acc
}

fn gamma_lanczos(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection keeps the series argument in its accurate range.
        return PI / ((PI * x).sin() * gamma_lanczos(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

// Bernoulli numbers B_2, B_4, ..., B_16 for Euler-Maclaurin.
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

/// Riemann zeta function for real s > 1, via Euler-Maclaurin summation.
pub fn zeta(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::Domain(format!(
            "zeta requires s > 1, got {s}"
        )));
    }
    Ok(zeta_unchecked(s))
}

fn zeta_unchecked(s: f64) -> f64 {
    const N: u32 = 16;
    let nf = f64::from(N);
    let mut sum = 0.0;
    for k in 1..N {
        sum += f64::from(k).powf(-s);
    }
    sum += nf.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * nf.powf(-s);
    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
    let mut rising = s; // s(s+1)...(s+2j-2), starts at j = 1
    let mut factorial = 2.0; // (2j)!
    let mut power = nf.powf(-s - 1.0);
    let n2 = nf * nf;
    for (j, b) in BERNOULLI.iter().enumerate() {
        sum += b / factorial * rising * power;
        let k = 2 * (j as u32 + 1);
        rising *= (s + f64::from(k) - 1.0) * (s + f64::from(k));
        factorial *= f64::from(k + 1) * f64::from(k + 2);
        power /= n2;
    }
    sum
}

/// Zeta at nonpositive integer arguments, needed by the polylogarithm
/// expansion around z = 1. Uses the functional equation for the odd values.
fn zeta_nonpositive(n: i64) -> f64 {
    debug_assert!(n <= 0);
    if n == 0 {
        return -0.5;
    }
    if n % 2 == 0 {
        return 0.0; // trivial zeros
    }
    // zeta(1 - 2m) = 2 (-1)^m (2m-1)! zeta(2m) / (2 pi)^(2m)
    let m = (1 - n) / 2;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let mut fact = 1.0; // (2m - 1)!
    for k in 2..(2 * m) {
        fact *= k as f64;
    }
    2.0 * sign * fact * zeta_unchecked(2.0 * m as f64) / (2.0 * PI).powi(2 * m as i32)
}

/// Polylogarithm Li_s(z) for integer order s >= 1 and real z in [0, 1].
///
/// `Li_1(z) = -ln(1 - z)` is honored exactly; `Li_s(1) = zeta(s)` for
/// s >= 2. The point (s = 1, z = 1) diverges.
pub fn polylog(s: u32, z: f64) -> Result<f64> {
    if s < 1 {
        return Err(Error::Domain(format!(
            "polylog order must satisfy s >= 1, got {s}"
        )));
    }
    if !z.is_finite() || !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain(format!(
            "polylog requires z in [0, 1], got {z}"
        )));
    }
    if s == 1 {
        if z == 1.0 {
            return Err(Error::Divergent("Li_1(z) diverges at z = 1".into()));
        }
        return Ok(-(-z).ln_1p());
    }
    if z == 1.0 {
        return zeta(f64::from(s));
    }
    if z <= 0.5 {
        Ok(polylog_series(s, z))
    } else {
        Ok(polylog_log_expansion(s, z))
    }
}

/// Direct power series sum_k z^k / k^s with the geometric tail bound
/// z^(K+1) / ((K+1)^s (1 - z)).
fn polylog_series(s: u32, z: f64) -> f64 {
    let se = f64::from(s);
    let mut sum = 0.0;
    let mut zk = 1.0;
    for k in 1..=200_u32 {
        zk *= z;
        let term = zk / f64::from(k).powf(se);
        sum += term;
        let tail = zk * z / (f64::from(k + 1).powf(se) * (1.0 - z));
        if tail < f64::EPSILON * sum {
            break;
        }
    }
    sum
}

/// Expansion of Li_n(e^{-w}) in powers of w = -ln z, valid for 0 < w < 2 pi:
///
/// ```text
/// Li_n(e^-w) = (-w)^(n-1)/(n-1)! (H_{n-1} - ln w)
///            + sum_{k >= 0, k != n-1} zeta(n - k) (-w)^k / k!
/// ```
fn polylog_log_expansion(s: u32, z: f64) -> f64 {
    let n = s as i64;
    let w = -z.ln();
    // Harmonic number H_{n-1} and (n-1)!.
    let mut harmonic = 0.0;
    let mut fact_nm1 = 1.0;
    for j in 1..n {
        harmonic += 1.0 / j as f64;
        fact_nm1 *= j as f64;
    }
    let mut sum = (-w).powi((n - 1) as i32) / fact_nm1 * (harmonic - w.ln());
    let mut wk = 1.0; // (-w)^k / k!
    for k in 0..80_i64 {
        if k != n - 1 {
            let arg = n - k;
            let zv = if arg >= 2 {
                zeta_unchecked(arg as f64)
            } else {
                zeta_nonpositive(arg)
            };
            let term = zv * wk;
            sum += term;
            if k > n && term.abs() < f64::EPSILON * sum.abs() {
                break;
            }
        }
        wk *= -w / (k + 1) as f64;
    }
    sum
}

/// Volume of the d-dimensional unit ball, pi^(d/2) / gamma(d/2 + 1).
pub fn unit_ball_volume(d: u32) -> f64 {
    let half = f64::from(d) / 2.0;
    PI.powf(half) / gamma_half_integer(u64::from(d) + 2)
}

/// Coefficient theta_m of the generalized radiation law,
///
/// ```text
/// theta_m = zeta(m+1) gamma(m+1) m / (2^m pi^(m/2) gamma(m/2 + 1)) * (k_B / (hbar c))^m
/// ```
///
/// so that an energy term reads `k_B * theta_m * L^m * T^(m+1)`. Requires
/// m >= 1. In natural units `theta_1 = pi/6`, `theta_2 = zeta(3)/pi` and
/// `theta_3 = pi^2/30`.
pub fn theta_coeff(m: u32, constants: &PhysicalConstants) -> f64 {
    assert!(m >= 1, "theta_coeff requires m >= 1");
    let mf = f64::from(m);
    let numerator = zeta_unchecked(mf + 1.0) * gamma_half_integer(2 * u64::from(m) + 2) * mf;
    let denominator =
        2f64.powi(m as i32) * PI.powf(mf / 2.0) * gamma_half_integer(u64::from(m) + 2);
    let scale = (constants.k_b / (constants.hbar * constants.c)).powi(m as i32);
    numerator / denominator * scale
}
