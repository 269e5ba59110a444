use num_complex::Complex64;

use crate::asymptotics::bernoulli::bernoulli_f64;
use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureConfig};

pub type ComplexPoint = Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const LOG_SQRT_TWO_PI: f64 = 0.918_938_533_204_672_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    pub log_sqrt_two_pi: f64,
}

pub const CONSTANTS: Constants = Constants { euler_gamma: EULER_GAMMA, log_sqrt_two_pi: LOG_SQRT_TWO_PI };

const STIRLING_TERMS: usize = 10;
const SHIFT_TO: f64 = 15.0;

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0
}

fn check_point(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if on_cut(z) {
        return Err(Error::Cut(z));
    }
    Ok(())
}

fn stirling(w: Complex64) -> Complex64 {
    let mut s = (w - 0.5) * w.ln() - w + LOG_SQRT_TWO_PI;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    for k in 1..=STIRLING_TERMS {
        let kk = 2 * k;
        s += p * (bernoulli_f64(kk) / (kk * (kk - 1)) as f64);
        p *= inv2;
    }
    s
}

/// The branch of log Γ that is holomorphic on ℂ∖(−∞, 0] and real on (0, ∞).
///
/// Differs from `Γ(z).ln()` by multiples of 2πi away from the real axis.
pub fn log_gamma_principal(z: ComplexPoint) -> Result<ComplexPoint> {
    check_point(z)?;
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// log Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut w = x;
    let mut prod = 1.0;
    while w < SHIFT_TO {
        prod *= w;
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut s = (w - 0.5) * w.ln() - w + LOG_SQRT_TWO_PI;
    let mut p = inv;
    for k in 1..=STIRLING_TERMS {
        let kk = 2 * k;
        s += p * bernoulli_f64(kk) / (kk * (kk - 1)) as f64;
        p *= inv2;
    }
    s - prod.ln()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// log |Γ(x)| for real x off the poles, via reflection for x < 0.
pub fn ln_abs_gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x > 0.0 {
        return Ok(ln_gamma(x));
    }
    let s = (std::f64::consts::PI * x).sin().abs();
    Ok(std::f64::consts::PI.ln() - s.ln() - ln_gamma(1.0 - x))
}

/// Euler's Γ on the real line.
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x > 0.0 {
        return Ok(ln_gamma(x).exp());
    }
    let mut w = x;
    let mut prod = 1.0;
    while w <= 0.0 {
        prod *= w;
        w += 1.0;
    }
    Ok(ln_gamma(w).exp() / prod)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn polygamma_asymptotic(m: usize, w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    if m == 0 {
        let mut s = w.ln() - inv * 0.5;
        let mut p = inv2;
        for k in 1..=STIRLING_TERMS {
            s -= p * (bernoulli_f64(2 * k) / (2 * k) as f64);
            p *= inv2;
        }
        return s;
    }
    let mut p = inv.powu(m as u32);
    let mut s = p * factorial(m - 1);
    p *= inv;
    s += p * (factorial(m) / 2.0);
    for k in 1..=STIRLING_TERMS {
        p *= inv;
        s += p * (bernoulli_f64(2 * k) * factorial(2 * k + m - 1) / factorial(2 * k));
        p *= inv;
    }
    if m % 2 == 1 {
        s
    } else {
        -s
    }
}

fn polygamma_shifted(m: usize, z: Complex64) -> Complex64 {
    let threshold = SHIFT_TO + m as f64;
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.re < threshold {
        acc += w.powi(-(m as i32 + 1));
        w += 1.0;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    polygamma_asymptotic(m, w) - acc * (sign * factorial(m))
}

/// ψ^{(m)}(z): the (m+1)-th derivative of log Γ, ψ itself for m = 0.
pub fn polygamma(m: usize, z: ComplexPoint) -> Result<ComplexPoint> {
    check_point(z)?;
    Ok(polygamma_shifted(m, z))
}

/// ψ^{(m)}(x) for real x off the poles; negative x reach (0, ∞) by recursion.
pub fn polygamma_real(m: usize, x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    Ok(polygamma_shifted(m, Complex64::new(x, 0.0)).re)
}

pub fn digamma(x: f64) -> Result<f64> {
    polygamma_real(0, x)
}

/// ψ(x) = −γ + ∫_0^∞ (e^{−t} − e^{−xt})/(1 − e^{−t}) dt.
pub fn psi_integral_representation(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("psi integral needs x > 0, got {x}")));
    }
    let f = move |t: f64| {
        if t == 0.0 {
            return x - 1.0;
        }
        if t > 1.0 {
            return ((-t).exp() - (-x * t).exp()) / -(-t).exp_m1();
        }
        (-t).exp() * (-(x - 1.0) * t).exp_m1() / (-t).exp_m1()
    };
    let cfg = QuadratureConfig::with_tolerances(1e-13, 1e-12).breakpoints(vec![1.0]);
    Ok(integrate(f, 0.0, f64::INFINITY, &cfg)?.value - EULER_GAMMA)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn half_and_factorials() {
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(6.0).unwrap() - 120.0).abs() < 1e-11);
        assert!((gamma(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!(matches!(gamma(-2.0), Err(Error::Pole(_))));
    }

    #[test]
    fn principal_branch_basics() {
        assert!(log_gamma_principal(Complex64::new(1.0, 0.0)).unwrap().norm() < 1e-15);
        let h = log_gamma_principal(Complex64::new(0.5, 0.0)).unwrap();
        assert!((h.re - 0.5 * PI.ln()).abs() < 1e-14 && h.im == 0.0);
        assert!(matches!(log_gamma_principal(Complex64::new(-2.0, 0.0)), Err(Error::Cut(_))));
        assert!(log_gamma_principal(Complex64::new(-2.0, 1e-9)).is_ok());
    }

    #[test]
    fn conjugate_symmetry() {
        let z = Complex64::new(-3.3, 2.1);
        let a = log_gamma_principal(z).unwrap();
        let b = log_gamma_principal(z.conj()).unwrap();
        assert!((a - b.conj()).norm() < 1e-13);
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 4e-15);
        assert!((polygamma_real(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        // reflection: ψ(1−x) − ψ(x) = π cot πx
        let x = -0.3;
        let lhs = digamma(1.0 - x).unwrap() - digamma(x).unwrap();
        assert!((lhs - PI / (PI * x).tan()).abs() < 1e-12);
    }

    #[test]
    fn trigamma_series_oracle() {
        // ψ'(x) = Σ 1/(x+k)^2, direct sum with integral tail
        let x = 0.37;
        let n = 200_000;
        let mut s: f64 = (0..n).map(|k| 1.0 / ((x + k as f64) * (x + k as f64))).sum();
        s += 1.0 / (x + n as f64 - 0.5);
        assert!((polygamma_real(1, x).unwrap() - s).abs() < 1e-11);
    }

    #[test]
    fn psi_integral_matches() {
        for &x in &[0.3, 1.0, 2.0, 10.0] {
            let a = psi_integral_representation(x).unwrap();
            let b = digamma(x).unwrap();
            assert!((a - b).abs() < 1e-9, "x={x}: {a} vs {b}");
        }
    }
}
