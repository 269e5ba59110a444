use crate::asymptotics::bernoulli::bernoulli_f64;
use crate::error::{Error, Result};
use crate::numerics::{extrapolate_limit, integrate, QuadratureConfig};
use crate::special::gamma::{ln_gamma, LOG_SQRT_TWO_PI};

const EM_TERMS: usize = 10;
const EM_SHIFT: f64 = 12.0;

/// Hurwitz ζ(s, x) for real s ≠ 1 and x > 0, by Euler–Maclaurin.
pub fn hurwitz_zeta(s: f64, x: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(Error::Pole(1.0));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("hurwitz zeta needs x > 0, got {x}")));
    }
    let mut sum = 0.0;
    let mut a = x;
    while a < EM_SHIFT {
        sum += a.powf(-s);
        a += 1.0;
    }
    sum += a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · a^{−s−2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut pw = a.powf(-s - 1.0);
    let inv2 = 1.0 / (a * a);
    for j in 1..=EM_TERMS {
        sum += bernoulli_f64(2 * j) / fact * rising * pw;
        let k = 2 * j;
        rising *= (s + k as f64 - 1.0) * (s + k as f64);
        fact *= ((k + 1) * (k + 2)) as f64;
        pw *= inv2;
    }
    Ok(sum)
}

/// ∂_s ζ(s, x) by central differences on the ladder h, h/2, h/4 with
/// extrapolation in h².
pub fn hurwitz_zeta_ds(s: f64, x: f64, h: f64) -> Result<f64> {
    if !(h > 0.0 && h <= 1e-3) {
        return Err(Error::Domain(format!("step {h} outside (0, 1e-3]")));
    }
    let mut samples = Vec::with_capacity(3);
    for k in 0..3 {
        let hk = h / f64::from(1 << k);
        let d = (hurwitz_zeta(s + hk, x)? - hurwitz_zeta(s - hk, x)?) / (2.0 * hk);
        samples.push((hk * hk, d));
    }
    Ok(extrapolate_limit(&samples)?.value)
}

/// |∂_s ζ(0, x) − (log Γ(x) − log √(2π))|.
pub fn lerch_theorem_residual(x: f64, h: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let d = hurwitz_zeta_ds(0.0, x, h)?;
    Ok((d - (ln_gamma(x) - LOG_SQRT_TWO_PI)).abs())
}

/// ζ_N(z, w) = Γ(z)^{-1} ∫_0^∞ t^{z−1} e^{−wt} (1 − e^{−t})^{−N} dt for z > N.
pub fn multiple_zeta(n: usize, z: f64, w: f64) -> Result<f64> {
    if n == 0 || !(z > n as f64) || !(w > 0.0) {
        return Err(Error::Domain(format!("multiple zeta needs N ≥ 1, z > N, w > 0 (N={n}, z={z}, w={w})")));
    }
    let nf = n as i32;
    let f = move |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        // t^{z−1}/(1−e^{−t})^N = t^{z−1−N} (t/(1−e^{−t}))^N
        let q = t / -(-t).exp_m1();
        (-w * t).exp() * t.powf(z - 1.0 - n as f64) * q.powi(nf)
    };
    let cfg = QuadratureConfig::with_tolerances(1e-14, 1e-12).breakpoints(vec![1.0]);
    let v = integrate(f, 0.0, f64::INFINITY, &cfg)?.value;
    Ok(v * (-ln_gamma(z)).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn basel_and_shift() {
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((hurwitz_zeta(2.0, 2.0).unwrap() - (PI * PI / 6.0 - 1.0)).abs() < 1e-14);
        assert!(matches!(hurwitz_zeta(1.0, 2.0), Err(Error::Pole(_))));
    }

    #[test]
    fn zeta_at_zero_is_affine() {
        for &x in &[0.1, 1.0, 3.7, 20.0] {
            assert!((hurwitz_zeta(0.0, x).unwrap() - (0.5 - x)).abs() < 1e-13);
        }
    }

    #[test]
    fn direct_summation_oracle() {
        let (s, x) = (3.5, 0.7);
        let n = 100_000;
        let direct: f64 = (0..n).rev().map(|k| (x + k as f64).powf(-s)).sum::<f64>()
            + (x + n as f64 - 0.5).powf(1.0 - s) / (s - 1.0);
        assert!((hurwitz_zeta(s, x).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn lerch_at_one() {
        assert!(lerch_theorem_residual(1.0, 1e-3).unwrap() < 1e-8);
        assert!(lerch_theorem_residual(0.5, 1e-3).unwrap() < 1e-8);
    }

    #[test]
    fn multiple_zeta_values() {
        assert!((multiple_zeta(1, 2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-10);
        assert!((multiple_zeta(2, 4.0, 1.0).unwrap() - ZETA3).abs() < 1e-10);
        assert!((multiple_zeta(1, 3.0, 2.0).unwrap() - (ZETA3 - 1.0)).abs() < 1e-10);
        assert!(multiple_zeta(2, 2.0, 1.0).is_err());
    }
}
