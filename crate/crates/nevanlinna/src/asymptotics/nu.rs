use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureConfig};

fn summand(m: usize, t: f64, k: f64) -> f64 {
    let a = 2.0 * PI * k;
    let d = t * t + a * a;
    a.powi(1 - 2 * m as i32) * (2.0 * a / d + 4.0 * a * t / (d * d) + (2 * m - 1) as f64 / a * 2.0 * t / d)
}

/// The positive density ν_m with (−1)^{m−1}R_{2,2m}(w) = ∫ e^{−wt} t^{2m−2} ν_m(t) dt.
///
/// Sums the first K terms and replaces the rest by the midpoint Euler–Maclaurin tail.
pub fn nu_m(m: usize, t: f64) -> Result<f64> {
    if m == 0 || !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("nu_m needs m ≥ 1 and t ≥ 0 (m={m}, t={t})")));
    }
    let k_max = 1000usize.max((4.0 * t) as usize);
    let mut sum = 0.0;
    for k in (1..=k_max).rev() {
        sum += summand(m, t, k as f64);
    }
    let s0 = k_max as f64 + 0.5;
    let cfg = QuadratureConfig::with_tolerances(1e-300, 1e-12);
    let tail = integrate(|s| summand(m, t, s), s0, f64::INFINITY, &cfg)?;
    let h = 1e-3 * s0;
    let slope = (summand(m, t, s0 + h) - summand(m, t, s0 - h)) / (2.0 * h);
    let value = sum + tail.value + slope / 24.0;
    if tail.error > 1e-10 * value.abs() {
        return Err(Error::NonConvergence { value, error: tail.error });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::remainder_rnm;

    #[test]
    fn value_at_zero() {
        // ν_m(0) = 2ζ(2m)/(2π)^{2m}
        let z2 = PI * PI / 6.0;
        assert!((nu_m(1, 0.0).unwrap() - 2.0 * z2 / (2.0 * PI).powi(2)).abs() < 1e-12);
        let z4 = PI.powi(4) / 90.0;
        assert!((nu_m(2, 0.0).unwrap() - 2.0 * z4 / (2.0 * PI).powi(4)).abs() < 1e-14);
    }

    #[test]
    fn positive() {
        for m in 1..=4 {
            for &t in &[1e-3, 0.5, 3.0, 40.0, 5000.0] {
                assert!(nu_m(m, t).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn laplace_pair() {
        let (m, w) = (1usize, 2.0);
        let cfg = QuadratureConfig::with_tolerances(1e-13, 1e-10);
        let lhs = integrate(|t| (-w * t).exp() * t.powi(2 * m as i32 - 2) * nu_m(m, t).unwrap(), 0.0, f64::INFINITY, &cfg)
            .unwrap()
            .value;
        let rhs = remainder_rnm(2, 2 * m, w).unwrap();
        assert!((lhs - rhs).abs() < 1e-7, "{lhs} vs {rhs}");
    }
}
