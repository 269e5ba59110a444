use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::gamma::EULER_GAMMA;
use crate::special::zeta::hurwitz_zeta;

const TWO_PI_LN: f64 = 1.837_877_066_409_345_5;

/// Default number of product factors before the ζ-series tail takes over.
pub fn default_truncation(z: Complex64) -> usize {
    (8.0 * z.norm()).ceil().max(64.0) as usize
}

// k log(1 + z/k) − z + z²/(2k) = Σ_{j≥3} (−1)^{j+1} z^j / (j k^{j−1})
fn factor_log(z: Complex64, k: f64) -> Complex64 {
    let r = z / k;
    if r.norm() >= 0.25 {
        return (r + 1.0).ln() * k - z + z * z / (2.0 * k);
    }
    let mut s = Complex64::new(0.0, 0.0);
    let mut p = r * r * z;
    let mut j = 3;
    loop {
        let term = p / j as f64;
        if j % 2 == 0 {
            s -= term;
        } else {
            s += term;
        }
        if term.norm() <= 1e-18 * s.norm().max(1e-300) || j > 80 {
            break;
        }
        p *= r;
        j += 1;
    }
    s
}

/// log G(z+1), holomorphic on ℂ∖(−∞, −1] and real for z > −1.
///
/// The Weierstrass product is kept for `n` factors; the remaining factors
/// are summed as Σ_{j≥3} (−1)^{j+1} z^j/j · ζ(j−1, n+1).
pub fn log_barnes_g1_with(z: Complex64, n: usize) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= -1.0 {
        return Err(Error::Cut(z));
    }
    let n = n.max(1);
    if z.norm() * 2.0 >= n as f64 {
        return Err(Error::Domain(format!("truncation {n} too small for |z| = {}", z.norm())));
    }
    let mut s = z * (0.5 * TWO_PI_LN) - ((z * z) * (1.0 + EULER_GAMMA) + z) * 0.5;
    for k in 1..=n {
        s += factor_log(z, k as f64);
    }
    let mut p = z * z * z;
    let mut tail = Complex64::new(0.0, 0.0);
    for j in 3..200 {
        let term = p * (hurwitz_zeta((j - 1) as f64, (n + 1) as f64)? / j as f64);
        if j % 2 == 0 {
            tail -= term;
        } else {
            tail += term;
        }
        if term.norm() <= 1e-18 * (s.norm() + 1.0) {
            return Ok(s + tail);
        }
        p *= z;
    }
    Err(Error::NonConvergence { value: (s + tail).norm(), error: p.norm() })
}

pub fn log_barnes_g1(z: Complex64) -> Result<Complex64> {
    log_barnes_g1_with(z, default_truncation(z))
}

/// log G(w) for w off (−∞, 0].
pub fn log_barnes_g(w: Complex64) -> Result<Complex64> {
    log_barnes_g1(w - 1.0)
}

/// Barnes G(z) for Re z > −1.
pub fn barnes_g(z: Complex64) -> Result<Complex64> {
    if !(z.re > -1.0) {
        return Err(Error::Domain(format!("barnes_g needs Re z > -1, got {z}")));
    }
    let zm = z - 1.0;
    if zm.im == 0.0 && zm.re <= -1.0 {
        if z.re == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        // G(z) = G(z+1)/Γ(z)
        let g1 = log_barnes_g1(z)?.exp();
        return Ok(g1 / crate::special::gamma::gamma(z.re)?);
    }
    Ok(log_barnes_g1(zm)?.exp())
}

/// ζ′(−1).
pub const ZETA_PRIME_MINUS_ONE: f64 = -0.165_421_143_700_450_9;

const G_ASYMPTOTIC_FROM: f64 = 20.0;
const G_TAYLOR_RADIUS: f64 = 0.5;
const G_TAYLOR_TERMS: usize = 60;

fn zeta_table() -> &'static [f64] {
    static TABLE: std::sync::OnceLock<Vec<f64>> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| (0..=G_TAYLOR_TERMS).map(|k| if k < 2 { 0.0 } else { hurwitz_zeta(k as f64, 1.0).unwrap_or(1.0) }).collect())
}

// log G(1+x) = x(log 2π − 1)/2 − (1+γ)x²/2 + Σ_{k≥3} (−1)^{k−1} ζ(k−1) x^k/k
fn ln_barnes_g1_taylor(x: f64) -> f64 {
    let z = zeta_table();
    let mut s = 0.5 * x * (TWO_PI_LN - 1.0) - 0.5 * (1.0 + EULER_GAMMA) * x * x;
    let mut p = x * x * x;
    for k in 3..=G_TAYLOR_TERMS {
        let term = z[k - 1] * p / k as f64;
        s += if k % 2 == 1 { term } else { -term };
        p *= x;
    }
    s
}

/// log G(1+x) for real x > −1, via the recurrence G(1+x) = Γ(x)G(x) and the large-x expansion.
pub fn ln_barnes_g1_real(x: f64) -> Result<f64> {
    if !(x > -1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_barnes_g1_real needs finite x > -1, got {x}")));
    }
    if x.abs() <= G_TAYLOR_RADIUS {
        return Ok(ln_barnes_g1_taylor(x));
    }
    let mut z = x;
    let mut shift = 0.0;
    while z < G_ASYMPTOTIC_FROM {
        // log G(2+z) = log G(1+z) + log Γ(1+z)
        shift += crate::special::gamma::ln_gamma(z + 1.0);
        z += 1.0;
    }
    let lz = z.ln();
    let mut s = 0.5 * z * z * lz - 0.75 * z * z + 0.5 * z * TWO_PI_LN - lz / 12.0 + ZETA_PRIME_MINUS_ONE;
    let inv2 = 1.0 / (z * z);
    let mut p = inv2;
    for k in 1..=8 {
        s += crate::asymptotics::bernoulli::bernoulli_f64(2 * k + 2) / (4 * k * (k + 1)) as f64 * p;
        p *= inv2;
    }
    Ok(s - shift)
}

/// Clausen's function Cl₂(θ) = −∫_0^θ log|2 sin(t/2)| dt.
pub fn clausen2(theta: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut t = theta.rem_euclid(two_pi);
    let mut sign = 1.0;
    if t > std::f64::consts::PI {
        t = two_pi - t;
        sign = -1.0;
    }
    if t == 0.0 {
        return 0.0;
    }
    let mut s = t - t * t.ln();
    let t2 = t * t;
    let mut p = t * t2;
    let mut fact = 2.0;
    for n in 1..=20 {
        let b = crate::asymptotics::bernoulli::bernoulli_f64(2 * n).abs();
        let term = b * p / ((2 * n) as f64 * (2 * n + 1) as f64 * fact);
        s += term;
        if term < 1e-18 * s.abs() {
            break;
        }
        p *= t2;
        fact *= ((2 * n + 1) * (2 * n + 2)) as f64;
    }
    sign * s
}

/// log|G(1+x)| for real x off the zeros −1, −2, …, using the reflection
/// log G(1−s) = log G(1+s) − s log 2π + ∫_0^s πt cot πt dt for x = −s < −1.
pub fn ln_abs_barnes_g1_real(x: f64) -> Result<f64> {
    if x > -1.0 {
        return ln_barnes_g1_real(x);
    }
    if x == x.round() {
        return Err(Error::Pole(x));
    }
    let s = -x;
    let sin = (std::f64::consts::PI * (s - s.round())).sin().abs();
    let cot_integral = s * (2.0 * sin).ln() + clausen2(2.0 * std::f64::consts::PI * s) / (2.0 * std::f64::consts::PI);
    Ok(ln_barnes_g1_real(s)? - s * TWO_PI_LN + cot_integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::log_gamma_principal;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_integers() {
        for (w, g) in [(1.0, 1.0), (2.0, 1.0), (3.0, 1.0), (4.0, 2.0), (5.0, 12.0)] {
            let v = barnes_g(c(w, 0.0)).unwrap();
            assert!((v.re - g).abs() < 1e-12 * g && v.im.abs() < 1e-14, "G({w}) = {v}");
        }
    }

    #[test]
    fn functional_equation() {
        for z in [c(0.3, 0.0), c(2.5, 1.5), c(-0.4, 3.0), c(7.0, -2.0)] {
            let lhs = log_barnes_g(z + 1.0).unwrap();
            let rhs = log_gamma_principal(z).unwrap() + log_barnes_g(z).unwrap();
            let d = lhs - rhs;
            let k = (d.im / (2.0 * std::f64::consts::PI)).round();
            assert!((d - c(0.0, 2.0 * std::f64::consts::PI * k)).norm() < 1e-10, "{z}: {d}");
        }
    }

    #[test]
    fn truncation_independence() {
        let z = c(1.7, 0.8);
        let a = log_barnes_g1_with(z, 64).unwrap();
        let b = log_barnes_g1_with(z, 5000).unwrap();
        assert!((a - b).norm() < 1e-12);
    }

    #[test]
    fn real_branch_matches_complex() {
        for x in [-0.7, -0.3, 0.0, 0.2, 0.5, 0.51, 3.3, 19.5, 25.0, 150.0] {
            let a = ln_barnes_g1_real(x).unwrap();
            let b = log_barnes_g1(c(x, 0.0)).unwrap().re;
            assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "{x}: {a} vs {b}");
        }
    }

    #[test]
    fn clausen_values() {
        // Cl₂(π/2) is Catalan's constant
        assert!((clausen2(std::f64::consts::FRAC_PI_2) - 0.915_965_594_177_219).abs() < 1e-14);
        assert!(clausen2(std::f64::consts::PI).abs() < 1e-15);
        // direct quadrature oracle
        let t = 2.0;
        let q = crate::numerics::integrate(
            |u| -(2.0 * (u / 2.0).sin()).ln(),
            0.0,
            t,
            &crate::numerics::QuadratureConfig::with_tolerances(1e-15, 1e-13).breakpoints(vec![1.0]),
        )
        .unwrap()
        .value;
        assert!((clausen2(t) - q).abs() < 1e-12);
    }

    #[test]
    fn reflected_values_follow_recurrence() {
        // |G(1+x)| = |Γ(x)| |G(x)|, checked across the cut
        for x in [-1.3, -2.5, -4.75] {
            let lhs = ln_abs_barnes_g1_real(x).unwrap();
            let rhs = crate::special::ln_abs_gamma(x).unwrap() + ln_abs_barnes_g1_real(x - 1.0).unwrap();
            assert!((lhs - rhs).abs() < 1e-10, "{x}: {lhs} vs {rhs}");
        }
        // x = −0.5 from both sides of the formula
        let a = ln_barnes_g1_real(-0.5).unwrap();
        let s = 0.5f64;
        let b = ln_barnes_g1_real(s).unwrap() - s * TWO_PI_LN
            + s * (2.0f64).ln()
            + clausen2(std::f64::consts::PI) / (2.0 * std::f64::consts::PI);
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn g_at_half_constant() {
        let g_half = barnes_g(c(0.5, 0.0)).unwrap().re;
        let g_3half = barnes_g(c(1.5, 0.0)).unwrap().re;
        assert!((g_3half - std::f64::consts::PI.sqrt() * g_half).abs() < 1e-12);
        assert!((g_half - 0.603_244_281_209_446_2).abs() < 1e-12);
    }
}
