//! g_λ(x) = x^λ Γ(x)/Γ(x+λ) and the gamma-ratio Stieltjes function of order 2.

use serde::Serialize;

use crate::classes::{check_cm, check_lcm, check_stieltjes_order, DEFAULT_CM_TOL};
use crate::error::{Error, Result};
use crate::func::registry::{g_lambda, gamma_ratio, sigma_lambda};
use crate::func::{Func, Jet};
use crate::numerics::{integrate, Grid, QuadratureConfig, TailMap};
use crate::report::{ClassLabel, ClassReport, Witness};

/// ξ(t) = λ − (1 − e^{−λt})/(1 − e^{−t}).
pub fn xi(lambda: f64, t: f64) -> f64 {
    lambda - (-lambda * t).exp_m1() / (-t).exp_m1()
}

#[derive(Debug, Clone, Serialize)]
pub struct GLambdaReport {
    pub lambda: f64,
    /// ξ > 0 and increasing at the t samples (checked for λ > 1).
    pub xi_positive_increasing: Option<bool>,
    /// g_λ increasing for λ > 1, decreasing for λ < 1, at the grid.
    pub monotone_as_expected: bool,
    /// x σ_λ(x) CM.
    pub sigma_cm1: ClassReport,
    /// x^{2−λ} g_λ′ CM, i.e. g_λ ∈ B_{λ−1}; λ > 1.
    pub bernstein: Option<ClassReport>,
    /// −log g_λ ∈ S_2 for λ > 1, log g_λ ∈ S_2 for λ < 1.
    pub log_stieltjes_2: Option<ClassReport>,
}

pub fn g_lambda_suite(lambda: f64, grid: &Grid, orders: usize, tol: f64) -> Result<GLambdaReport> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("λ must be positive, got {lambda}")));
    }
    let g = g_lambda(lambda);
    let ts = Grid::log(1e-2, 25.0, 60).points();
    let xi_positive_increasing = (lambda > 1.0).then(|| {
        let v: Vec<f64> = ts.iter().map(|&t| xi(lambda, t)).collect();
        v.iter().all(|&x| x > 0.0) && v.windows(2).all(|w| w[1] > w[0])
    });
    let values = grid.points().iter().map(|&x| g.eval(x)).collect::<Result<Vec<_>>>()?;
    let monotone_as_expected = if lambda > 1.0 {
        values.windows(2).all(|w| w[1] > w[0])
    } else if lambda < 1.0 {
        values.windows(2).all(|w| w[1] < w[0])
    } else {
        values.iter().all(|v| (v - 1.0).abs() < 1e-12)
    };
    let sigma_cm1 = check_cm(&sigma_lambda(lambda), 1.0, grid, orders, tol)?;
    let bernstein = if lambda > 1.0 {
        let mut r = check_cm(&g.derivative().times_power(2.0 - lambda), 0.0, grid, orders, tol)?;
        r.function = g.name().to_string();
        r.class_label = ClassLabel::Bernstein(lambda - 1.0);
        Some(r)
    } else {
        None
    };
    let log_stieltjes_2 = if lambda == 1.0 {
        None
    } else {
        let l = if lambda > 1.0 { g.ln().scale(-1.0) } else { g.ln() };
        Some(check_stieltjes_order(&l, 2.0, 2, grid, orders, tol)?)
    };
    Ok(GLambdaReport { lambda, xi_positive_increasing, monotone_as_expected, sigma_cm1, bernstein, log_stieltjes_2 })
}

/// (1 − e^{−at})(1 − e^{−bt})/(t²(1 − e^{−t})), the Laplace density of t·(gamma ratio).
fn ratio_integrand(a: f64, b: f64, t: f64) -> f64 {
    let one_minus = |c: f64| -(-c * t).exp_m1();
    one_minus(a) * one_minus(b) / (t * t * one_minus(1.0))
}

/// The integrand as a function with jets, for the CM scan.
pub fn ratio_integrand_fn(a: f64, b: f64) -> Func {
    Func::from_jet(format!("ratio_density:{a}:{b}"), move |t, n| {
        let num = &Jet::one_minus_exp_linear(t, a, n) * &Jet::one_minus_exp_linear(t, b, n);
        let den = &Jet::power(t, 2.0, n) * &Jet::one_minus_exp_linear(t, 1.0, n);
        num.div(&den)
    })
}

/// ∫_0^∞ t e^{−xt} (1 − e^{−at})(1 − e^{−bt})/(t²(1 − e^{−t})) dt.
pub fn gamma_ratio_integral(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0 && x > 0.0) {
        return Err(Error::Domain(format!("need a, b, x > 0 (a={a}, b={b}, x={x})")));
    }
    let cfg = QuadratureConfig::with_tolerances(1e-14, 1e-12).tail(TailMap::Exponential);
    Ok(integrate(|t: f64| if t == 0.0 { a * b } else { t * (-x * t).exp() * ratio_integrand(a, b, t) }, 0.0, f64::INFINITY, &cfg)?
        .value)
}

/// Integral identity at `x_samples`, CM of the Laplace density, S_2 and LCM of the ratio.
pub fn gamma_ratio_representation(a: f64, b: f64, x_samples: &[f64], grid: &Grid, tol: f64) -> Result<ClassReport> {
    let f = gamma_ratio(a, b);
    let mut report = ClassReport::new(f.name(), ClassLabel::Stieltjes(2.0), grid.to_string(), 0, tol);
    for &x in x_samples {
        let direct = f.eval(x)?;
        let integral = gamma_ratio_integral(a, b, x)?;
        if (direct - integral).abs() > tol * direct.abs().max(1.0) {
            return Ok(report.refute(Witness::real(x, 0, direct - integral)).note("integral identity fails"));
        }
    }
    report = report.note(format!("integral identity holds at {} samples", x_samples.len()));
    let density = check_cm(&ratio_integrand_fn(a, b), 0.0, grid, 8, DEFAULT_CM_TOL)?;
    if density.is_refuted() {
        report = report.note("Laplace density is not CM");
    }
    report = report.absorb(&density);
    let s2 = check_stieltjes_order(&f, 2.0, 3, grid, 6, DEFAULT_CM_TOL)?;
    let lcm = check_lcm(&f, grid, 8, DEFAULT_CM_TOL)?;
    if lcm.is_refuted() {
        report = report.note("LCM refuted");
    }
    Ok(report.absorb(&s2).absorb(&lcm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_special_cases() {
        for t in [0.01, 0.5, 3.0, 40.0] {
            assert!(xi(1.0, t).abs() < 1e-15);
            assert!((xi(2.0, t) + (-t).exp_m1()).abs() < 1e-12);
        }
    }

    #[test]
    fn suites() {
        let grid = Grid::log(0.1, 20.0, 15);
        let two = g_lambda_suite(2.0, &grid, 6, DEFAULT_CM_TOL).unwrap();
        assert_eq!(two.xi_positive_increasing, Some(true));
        assert!(two.monotone_as_expected && two.sigma_cm1.is_verified());
        assert!(two.bernstein.unwrap().is_verified());
        assert!(two.log_stieltjes_2.unwrap().is_verified());
        let three = g_lambda_suite(3.0, &grid, 6, DEFAULT_CM_TOL).unwrap();
        assert!(three.bernstein.unwrap().is_verified());
        let half = g_lambda_suite(0.5, &grid, 6, DEFAULT_CM_TOL).unwrap();
        assert!(half.monotone_as_expected && half.log_stieltjes_2.unwrap().is_verified());
        let one = g_lambda_suite(1.0, &grid, 6, DEFAULT_CM_TOL).unwrap();
        assert!(one.monotone_as_expected && one.log_stieltjes_2.is_none());
    }

    #[test]
    fn gamma_ratio_identity() {
        assert!((gamma_ratio_integral(1.0, 1.0, 2.0).unwrap() - 1.5f64.ln()).abs() < 1e-12);
        for x in [0.3, 4.0] {
            assert!((gamma_ratio_integral(1.0, 1.0, x).unwrap() - (1.0 / x).ln_1p()).abs() < 1e-12);
        }
        let grid = Grid::log(0.1, 20.0, 12);
        let r = gamma_ratio_representation(0.5, 2.0, &[1.0, 3.0], &grid, 1e-8).unwrap();
        assert!(r.is_verified(), "{r} {:?}", r.notes);
    }
}
