use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureConfig};
use crate::special::gamma::ln_gamma;

/// Lower incomplete gamma γ(λ, x) = ∫_0^x u^{λ−1} e^{−u} du (not regularized).
pub fn incomplete_gamma(lambda: f64, x: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(x >= 0.0) {
        return Err(Error::Domain(format!("incomplete gamma needs λ > 0, x ≥ 0 (λ={lambda}, x={x})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let lg = ln_gamma(lambda);
    if x.is_infinite() {
        return Ok(lg.exp());
    }
    let prefactor = (lambda * x.ln() - x).exp();
    if x < lambda + 1.0 {
        let mut term = 1.0 / lambda;
        let mut sum = term;
        for n in 1..10_000 {
            term *= x / (lambda + n as f64);
            sum += term;
            if term.abs() < sum.abs() * 1e-17 {
                break;
            }
        }
        return Ok(prefactor * sum);
    }
    // Modified Lentz for the upper function Γ(λ, x).
    let tiny = 1e-300;
    let mut b = x + 1.0 - lambda;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - lambda);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    Ok(lg.exp() - prefactor * h)
}

/// B(a, b, x) = ∫_0^x t^{a−1}(1−t)^{b−1} dt; `b` may be any real when x < 1.
pub fn incomplete_beta(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x >= 0.0) {
        return Err(Error::Domain(format!("incomplete beta needs a > 0, x ≥ 0 (a={a}, x={x})")));
    }
    if x > 1.0 || (x == 1.0 && b <= 0.0) {
        return Err(Error::Domain(format!("incomplete beta needs x < 1 for b = {b}, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let cfg = QuadratureConfig::with_tolerances(1e-15, 1e-12);
    // u = t^a removes the singularity at 0
    let lower_end = x.min(0.5);
    let g = move |u: f64| (1.0 - u.powf(1.0 / a)).powf(b - 1.0);
    let mut total = integrate(g, 0.0, lower_end.powf(a), &cfg)?.value / a;
    if x > 0.5 {
        // s = 1 − t, then v = s^b when b > 0
        let lo = 1.0 - x;
        total += if b > 0.0 {
            let h = move |v: f64| (1.0 - v.powf(1.0 / b)).powf(a - 1.0);
            integrate(h, lo.powf(b), 0.5f64.powf(b), &cfg)?.value / b
        } else {
            let h = move |s: f64| s.powf(b - 1.0) * (1.0 - s).powf(a - 1.0);
            integrate(h, lo, 0.5, &cfg)?.value
        };
    }
    Ok(total)
}

/// Φ(z, 1, λ) = Σ_{n≥0} z^n/(n+λ) for |z| < 1.
pub fn lerch_phi(z: f64, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !(z.abs() < 1.0) {
        return Err(Error::Domain(format!("lerch phi needs |z| < 1, λ > 0 (z={z}, λ={lambda})")));
    }
    let mut sum = 0.0;
    let mut p = 1.0;
    for n in 0..2_000_000 {
        let term = p / (n as f64 + lambda);
        sum += term;
        // remaining tail is bounded by |term|·|z|/(1−|z|)
        if term.abs() * z.abs() / (1.0 - z.abs()) < 1e-16 * sum.abs().max(1e-300) {
            return Ok(sum);
        }
        p *= z;
    }
    Err(Error::NonConvergence { value: sum, error: p.abs() / (1.0 - z.abs()) })
}

/// x^λ Φ(−x, 1, λ) = ∫_0^x u^{λ−1}/(1+u) du, valid for every x > 0.
pub fn lerch_phi_scaled(x: f64, lambda: f64) -> Result<f64> {
    hyp2f1_special(1.0, lambda, x).map(|v| v / lambda)
}

/// x^λ ₂F₁(ν, λ; 1+λ; −x) = λ ∫_0^x u^{λ−1}(1+u)^{−ν} du.
pub fn hyp2f1_special(nu: f64, lambda: f64, x: f64) -> Result<f64> {
    if !(nu > 0.0 && lambda > 0.0 && x >= 0.0) {
        return Err(Error::Domain(format!("need ν, λ > 0 and x ≥ 0 (ν={nu}, λ={lambda}, x={x})")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let f = move |u: f64| u.powf(lambda - 1.0) * (1.0 + u).powf(-nu);
    let cfg = QuadratureConfig::with_tolerances(1e-15, 1e-12);
    Ok(lambda * integrate(f, 0.0, x, &cfg)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn incomplete_gamma_values() {
        assert!((incomplete_gamma(1.0, 1.0).unwrap() - (1.0 - (-1f64).exp())).abs() < 1e-15);
        assert_eq!(incomplete_gamma(2.0, 0.0).unwrap(), 0.0);
        assert!((incomplete_gamma(0.5, 200.0).unwrap() - PI.sqrt()).abs() < 1e-13);
        // continued fraction branch: γ(2, x) = 1 − (1+x)e^{−x}
        let x = 7.5;
        assert!((incomplete_gamma(2.0, x).unwrap() - (1.0 - (1.0 + x) * (-x).exp())).abs() < 1e-14);
    }

    #[test]
    fn incomplete_beta_values() {
        assert!((incomplete_beta(1.0, 1.0, 0.7).unwrap() - 0.7).abs() < 1e-14);
        assert!((incomplete_beta(2.0, 1.0, 0.5).unwrap() - 0.125).abs() < 1e-14);
        assert!((incomplete_beta(1.0, 2.0, 0.5).unwrap() - 0.375).abs() < 1e-14);
        assert!(incomplete_beta(1.0, -1.0, 1.0).is_err());
        // B(1/2, 1/2, 1) = π
        assert!((incomplete_beta(0.5, 0.5, 1.0).unwrap() - PI).abs() < 1e-10);
    }

    #[test]
    fn lerch_values() {
        assert!((lerch_phi(0.0, 3.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        assert!((lerch_phi(0.5, 1.0).unwrap() - 2.0 * LN_2).abs() < 1e-14);
        assert!((lerch_phi_scaled(1.0, 1.0).unwrap() - LN_2).abs() < 1e-13);
        let (x, l): (f64, f64) = (0.6, 0.5);
        let via_series = x.powf(l) * lerch_phi(-x, l).unwrap();
        assert!((lerch_phi_scaled(x, l).unwrap() - via_series).abs() < 1e-12);
    }

    #[test]
    fn hypergeometric_values() {
        assert!((hyp2f1_special(1.0, 1.0, 1.0).unwrap() - LN_2).abs() < 1e-13);
        assert!((hyp2f1_special(2.0, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-13);
        assert_eq!(hyp2f1_special(3.0, 2.0, 0.0).unwrap(), 0.0);
    }
}
