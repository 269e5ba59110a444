//! The Stieltjes-type representations
//! log Γ(z+1)/(z log z) = 1 − ∫_0^∞ d(s)/(s+z) ds and
//! log G(z+1)/(z² log z) = 1/2 − ∫_0^∞ d_G(s)/(s+z) ds.

use std::f64::consts::{PI, TAU as TWO_PI};

use num_complex::Complex64;

use super::pick::{boundary_density, scaled_ladder, verify_pick, HalfPlaneGrid};
use crate::error::{Error, Result};
use crate::numerics::{integrate, Estimate, QuadratureConfig};
use crate::report::{ClassLabel, ClassReport, Witness};
use crate::special::{
    ln_abs_barnes_g1_real, ln_barnes_g1_real, ln_gamma, log_barnes_g1, log_gamma_principal, LOG_SQRT_TWO_PI,
    ZETA_PRIME_MINUS_ONE,
};

/// Integer breakpoints are declared up to this cutoff; beyond it the mean part is integrated.
const CUTOFF: f64 = 200.0;
/// Samples this close to x = 1 are skipped (removable singularity of x log x).
const NEAR_ONE: f64 = 1e-3;

pub fn log_gamma_ratio(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma_principal(z + 1.0)? / (z * z.ln()))
}

pub fn g_ratio(z: Complex64) -> Result<Complex64> {
    Ok(log_barnes_g1(z)? / (z * z * z.ln()))
}

fn check_density_arg(s: f64) -> Result<(f64, f64)> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::Domain(format!("density needs s > 0, got {s}")));
    }
    let frac = s - s.round();
    if frac == 0.0 {
        return Err(Error::SingularPoint(s));
    }
    let l = s.ln();
    Ok((frac, l * l + PI * PI))
}

/// d(s) with s = −t > 0: (log|Γ(1−s)| + (k−1) log s)/(s (log² s + π²)), k = ⌈s⌉.
pub fn log_gamma_ratio_density(s: f64) -> Result<f64> {
    let (frac, q) = check_density_arg(s)?;
    let k = s.ceil();
    // log|Γ(1−s)| by reflection, with sin πs taken from the distance to the nearest integer
    let log_abs_gamma = PI.ln() - (PI * frac).sin().abs().ln() - ln_gamma(s);
    Ok((log_abs_gamma + (k - 1.0) * s.ln()) / (s * q))
}

/// d_G(s) = (T log s − log|G(1−s)|)/(s² (log² s + π²)), T = m(m+1)/2, m = ⌊s⌋.
pub fn g_ratio_density(s: f64) -> Result<f64> {
    Ok(g_ratio_density_scaled(s)? / s)
}

fn g_ratio_density_scaled(s: f64) -> Result<f64> {
    let (_, q) = check_density_arg(s)?;
    let m = s.floor();
    let t = m * (m + 1.0) / 2.0;
    Ok((t * s.ln() - ln_abs_barnes_g1_real(-s)?) / s / q)
}

/// ∫_0^∞ d(s)/(s + x) ds. Beyond `CUTOFF` the density is replaced by its mean
/// part, passed as `mean_dv(v)` = the mean part of the integrand in v = log s;
/// the sawtooth −B₁({s})·saw(s) contributes saw(T)/12.
/// On (0, 1] the integrand is taken in u = −log s as `head_du(u)`, since the
/// density may behave like 1/(s log² s) at 0.
fn density_transform(
    head_du: &(dyn Fn(f64) -> f64 + Sync),
    density: &(dyn Fn(f64) -> f64 + Sync),
    mean_dv: &(dyn Fn(f64) -> f64 + Sync),
    saw_at_cutoff: f64,
) -> Result<Estimate> {
    let cfg = QuadratureConfig::with_tolerances(1e-13, 1e-11);
    let head = integrate(head_du, 0.0, f64::INFINITY, &cfg.clone().breakpoints(vec![1.0]))?;
    let inner: Vec<f64> = (2..CUTOFF as usize).map(|k| k as f64).collect();
    let body = integrate(density, 1.0, CUTOFF, &cfg.clone().breakpoints(inner).max_subdivisions(20_000))?;
    let tail = integrate(mean_dv, CUTOFF.ln(), f64::INFINITY, &cfg)?;
    Ok(Estimate {
        value: head.value + body.value + tail.value + saw_at_cutoff / 12.0,
        error: head.error + body.error + tail.error,
    })
}

/// s²/(s (s + x)(log² s + π²)) at s = e^v, written so that large v cannot overflow.
fn tail_weight(v: f64, x: f64) -> f64 {
    1.0 / ((1.0 + x * (-v).exp()) * (v * v + PI * PI))
}

/// 1 − ∫_0^∞ d(s)/(s + x) ds.
pub fn log_gamma_ratio_stieltjes(x: f64) -> Result<Estimate> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let density = |s: f64| log_gamma_ratio_density(s).map(|d| d / (s + x)).unwrap_or(0.0);
    // mean numerator log√(2π) + s − μ(s), with μ(s) ≈ 1/(12s) − 1/(360s³) for s ≥ CUTOFF
    let mean_dv = |v: f64| {
        let r = (-v).exp();
        (1.0 + r * (LOG_SQRT_TWO_PI - r / 12.0 + r.powi(3) / 360.0)) * tail_weight(v, x)
    };
    let saw = CUTOFF.ln() * tail_weight(CUTOFF.ln(), x) / (CUTOFF * CUTOFF);
    // d stays bounded at 0, so s·d underflows harmlessly
    let head_du = |u: f64| {
        let s = (-u).exp();
        density(s) * s
    };
    let e = density_transform(&head_du, &density, &mean_dv, saw)?;
    Ok(Estimate { value: 1.0 - e.value, error: e.error })
}

/// 1/2 − ∫_0^∞ d_G(s)/(s + x) ds.
pub fn g_ratio_stieltjes(x: f64) -> Result<Estimate> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let density = |s: f64| g_ratio_density(s).map(|d| d / (s + x)).unwrap_or(0.0);
    // mean numerator 3s²/4 + (s/2) log 2π − ζ′(−1)
    let mean_dv = |v: f64| {
        let r = (-v).exp();
        (0.75 + r * (0.5 * (2.0 * PI).ln() - ZETA_PRIME_MINUS_ONE * r)) * tail_weight(v, x)
    };
    let saw = CUTOFF.ln() * tail_weight(CUTOFF.ln(), x) / (CUTOFF * CUTOFF);
    // s·d_G(s) → (log 2π − 1)/(2(log² s + π²)) as s → 0
    let head_du = |u: f64| {
        let s = (-u).exp();
        if s < 1e-150 {
            return 0.5 * (TWO_PI.ln() - 1.0) / ((u * u + PI * PI) * (s + x));
        }
        g_ratio_density_scaled(s).unwrap_or(0.0) / (s + x)
    };
    let e = density_transform(&head_du, &density, &mean_dv, saw)?;
    Ok(Estimate { value: 0.5 - e.value, error: e.error })
}

fn real_ratio(x: f64) -> Result<f64> {
    Ok(ln_gamma(x + 1.0) / (x * x.ln()))
}

/// Compares the direct ratio with the integral route at each sample.
pub fn verify_log_gamma_ratio_representation(x_samples: &[f64], tol: f64) -> Result<ClassReport> {
    let grid = format!("{x_samples:?}");
    let mut report = ClassReport::new("log_gamma_ratio", ClassLabel::Stieltjes(1.0), grid, 0, tol);
    let mut skipped = 0;
    for &x in x_samples {
        if (x - 1.0).abs() <= NEAR_ONE {
            skipped += 1;
            continue;
        }
        let direct = real_ratio(x)?;
        let rep = log_gamma_ratio_stieltjes(x)?.value;
        let rel = (direct - rep).abs() / direct.abs();
        if rel > tol {
            return Ok(report.refute(Witness::real(x, 0, rel)));
        }
    }
    if skipped > 0 {
        report = report.note(format!("{skipped} sample(s) near x = 1 skipped"));
    }
    Ok(report)
}

/// Pick property of log G(z+1)/(z² log z), its representation at real samples,
/// and the boundary density at `density_samples` (non-negative and equal to d_G).
pub fn g_function_ratio_check(
    grid: &HalfPlaneGrid,
    x_samples: &[f64],
    density_samples: &[f64],
    tol: f64,
) -> Result<ClassReport> {
    let mut report = verify_pick("g_ratio", &g_ratio, grid, tol)?;
    if report.is_refuted() {
        return Ok(report);
    }
    for &x in x_samples {
        let direct = ln_barnes_g1_real(x)? / (x * x * x.ln());
        let rep = g_ratio_stieltjes(x)?.value;
        if (direct - rep).abs() > tol.max(1e-8) * (1.0 + direct.abs()) {
            return Ok(report.refute(Witness::real(x, 0, direct - rep)));
        }
    }
    let integers: Vec<f64> = (0..=64).map(|k| -(k as f64)).collect();
    for &s in density_samples {
        let ladder = scaled_ladder(-s, &integers)?;
        let d = boundary_density(&g_ratio, -s, &ladder)?.value;
        let closed = g_ratio_density(s)?;
        if d < -tol || (d - closed).abs() > 1e-4 {
            return Ok(report.refute(Witness { x: -s, y: 0.0, order: 0, value: d - closed }));
        }
    }
    report.class_label = ClassLabel::Other("1/2 - S_1".into());
    Ok(report.note(format!("{} density samples non-negative", density_samples.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_values() {
        assert!((log_gamma_ratio_density(0.5).unwrap() - 0.110_61).abs() < 1e-5);
        assert!(matches!(log_gamma_ratio_density(2.0), Err(Error::SingularPoint(_))));
        assert!(log_gamma_ratio_density(3.0 - 1e-9).unwrap() > log_gamma_ratio_density(2.5).unwrap());
        for i in 1..200 {
            let s = i as f64 * 0.137;
            assert!(log_gamma_ratio_density(s).unwrap() >= 0.0, "{s}");
            assert!(g_ratio_density(s).unwrap() >= 0.0, "{s}");
        }
    }

    #[test]
    fn representation_matches_direct() {
        for x in [0.5, 2.0, 10.0] {
            let d = real_ratio(x).unwrap();
            let r = log_gamma_ratio_stieltjes(x).unwrap().value;
            assert!((d - r).abs() < 1e-7 * d, "{x}: {d} vs {r}");
        }
        let r = g_ratio_stieltjes(2.0).unwrap().value;
        assert!(r.abs() < 1e-7, "{r}");
    }

    #[test]
    fn boundary_density_recovers_closed_form() {
        let integers: Vec<f64> = (0..10).map(|k| -(k as f64)).collect();
        for s in [0.5, 1.3, 2.75] {
            let l = scaled_ladder(-s, &integers).unwrap();
            let d = boundary_density(&log_gamma_ratio, -s, &l).unwrap().value;
            assert!((d - log_gamma_ratio_density(s).unwrap()).abs() < 1e-5, "{s}");
        }
        let l = scaled_ladder(-0.5, &integers).unwrap();
        let d = boundary_density(&g_ratio, -0.5, &l).unwrap().value;
        assert!((d - 0.1953).abs() < 1e-4, "{d}");
    }
}
