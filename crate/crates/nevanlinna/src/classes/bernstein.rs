use std::sync::Arc;

use crate::error::{Error, Result};
use crate::func::{Func, Jet, JetEstimate};
use crate::halfplane::MeasureSpec;
use crate::numerics::{integrate, QuadratureConfig, TailMap};
use crate::special::{incomplete_beta, incomplete_gamma, ln_gamma};

/// a + b x^λ + ∫ γ(λ, xt) dμ(t)/t^λ.
#[derive(Clone)]
pub struct BernsteinRep {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    pub measure: MeasureSpec,
}

impl BernsteinRep {
    pub fn new(a: f64, b: f64, lambda: f64, measure: MeasureSpec) -> Result<Self> {
        if !(a >= 0.0 && b >= 0.0 && lambda > 0.0) {
            return Err(Error::Domain(format!("need a, b ≥ 0 and λ > 0 (a={a}, b={b}, λ={lambda})")));
        }
        let inside = measure.point_masses.iter().all(|&(t, _)| t > 0.0)
            && measure.density_pieces.iter().all(|p| p.lo >= 0.0);
        if !inside {
            return Err(Error::Domain("Bernstein measure must live on (0, ∞)".into()));
        }
        Ok(Self { a, b, lambda, measure })
    }
}

fn measure_cfg() -> QuadratureConfig {
    QuadratureConfig::with_tolerances(1e-13, 1e-11)
}

pub fn evaluate_bernstein_rep(rep: &BernsteinRep, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    let l = rep.lambda;
    let kernel = |t: f64| incomplete_gamma(l, x * t).map(|g| g / t.powf(l)).unwrap_or(f64::NAN);
    let integral = rep.measure.integrate(kernel, &measure_cfg())?;
    Ok(rep.a + rep.b * x.powf(l) + integral.value)
}

/// f_n(x) = a + b x^λ + Γ(λ+n)/Γ(n) ∫ B(λ, n, x/(x + n/t)) dμ(t)/t^λ.
pub fn thorin_approximant(rep: &BernsteinRep, n: usize, x: f64) -> Result<f64> {
    if n == 0 || !(x > 0.0) {
        return Err(Error::Domain(format!("need n ≥ 1 and x > 0 (n={n}, x={x})")));
    }
    let l = rep.lambda;
    let nf = n as f64;
    let ratio = (ln_gamma(l + nf) - ln_gamma(nf)).exp();
    let kernel = |t: f64| {
        let u = x * t / (x * t + nf);
        incomplete_beta(l, nf, u).map(|b| b / t.powf(l)).unwrap_or(f64::NAN)
    };
    let integral = rep.measure.integrate(kernel, &measure_cfg())?;
    Ok(rep.a + rep.b * x.powf(l) + ratio * integral.value)
}

fn laplace_cfg() -> QuadratureConfig {
    QuadratureConfig::with_tolerances(1e-14, 1e-12).tail(TailMap::Exponential)
}

/// XL(g)(x) = x ∫_0^∞ e^{−xt} g(t) dt, computed as ∫_0^∞ e^{−u} g(u/x) du.
pub fn xl_transform(g: &(dyn Fn(f64) -> f64 + Sync), x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("x must be positive, got {x}")));
    }
    Ok(integrate(|u: f64| (-u).exp() * g(u / x), 0.0, f64::INFINITY, &laplace_cfg())?.value)
}

/// XL(g) as a function with quadrature jets:
/// the Laplace transform L has Taylor coefficients (1/x) ∫ (−u)^k/k! e^{−u} g(u/x) du.
pub fn xl_image(name: impl Into<String>, g: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Func {
    let g2 = g.clone();
    let eval = move |x: f64| xl_transform(&*g2, x);
    let jet = move |x: f64, n: usize| -> Result<JetEstimate> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("x must be positive, got {x}")));
        }
        let mut c = Vec::with_capacity(n + 1);
        let mut err = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let kf = k as f64;
            let lf = ln_gamma(kf + 1.0);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let h = |u: f64| {
                let w = if u > 0.0 { (kf * u.ln() - u - lf).exp() } else if k == 0 { 1.0 } else { 0.0 };
                w * g(u / x)
            };
            let e = integrate(h, 0.0, f64::INFINITY, &laplace_cfg())?;
            c.push(sign * e.value / x);
            err.push(e.error / x);
        }
        // XL(g) = x · L
        let lap = Jet { x, c };
        let out = &Jet::variable(x, n) * &lap;
        let err = err.iter().enumerate().map(|(k, e)| e * x + if k > 0 { err[k - 1] * x } else { 0.0 }).collect();
        Ok(JetEstimate::new(out, err))
    };
    Func::from_jet_estimate(name, eval, jet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{check_stieltjes_order, DEFAULT_CM_TOL};
    use crate::halfplane::DensityPiece;
    use crate::numerics::Grid;

    #[test]
    fn bernstein_rep_values() {
        let r = BernsteinRep::new(0.0, 1.0, 1.0, MeasureSpec::zero()).unwrap();
        assert_eq!(evaluate_bernstein_rep(&r, 3.0).unwrap(), 3.0);
        let r = BernsteinRep::new(0.0, 0.0, 1.0, MeasureSpec::point_mass(1.0, 1.0).unwrap()).unwrap();
        assert!((evaluate_bernstein_rep(&r, 2.0).unwrap() - (1.0 - (-2.0f64).exp())).abs() < 1e-14);
        let r = BernsteinRep::new(0.0, 0.0, 2.0, MeasureSpec::point_mass(1.0, 1.0).unwrap()).unwrap();
        assert!((evaluate_bernstein_rep(&r, 60.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(BernsteinRep::new(-1.0, 0.0, 1.0, MeasureSpec::zero()).is_err());
        assert!(BernsteinRep::new(0.0, 0.0, 1.0, MeasureSpec::point_mass(-1.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn thorin_approximants_converge() {
        let r = BernsteinRep::new(0.0, 1.0, 1.0, MeasureSpec::zero()).unwrap();
        assert_eq!(thorin_approximant(&r, 7, 2.5).unwrap(), 2.5);
        let pm = BernsteinRep::new(0.0, 0.0, 1.0, MeasureSpec::point_mass(1.0, 1.0).unwrap()).unwrap();
        assert!((thorin_approximant(&pm, 1, 2.0).unwrap() - 2.0 / 3.0).abs() < 1e-14);
        let target = evaluate_bernstein_rep(&pm, 2.0).unwrap();
        let errs: Vec<f64> = [4, 16, 64].iter().map(|&n| (thorin_approximant(&pm, n, 2.0).unwrap() - target).abs()).collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2] && errs[2] < 5e-3, "{errs:?}");
        // density on (0, 1): dμ = dt
        let dens = BernsteinRep::new(0.0, 0.0, 1.5, MeasureSpec::density(DensityPiece::new(0.0, 1.0, |_| 1.0)).unwrap()).unwrap();
        let v = evaluate_bernstein_rep(&dens, 1.3).unwrap();
        assert!((thorin_approximant(&dens, 400, 1.3).unwrap() - v).abs() < 5e-3 * v);
    }

    #[test]
    fn xl_examples() {
        let g = |t: f64| 1.0 - (-t).exp();
        for x in [0.1, 1.0, 7.5] {
            assert!((xl_transform(&g, x).unwrap() - 1.0 / (x + 1.0)).abs() < 1e-12);
            assert!((xl_transform(&|t| t, x).unwrap() - 1.0 / x).abs() < 1e-12);
        }
        assert!(xl_transform(&|t: f64| (t * t).exp(), 1.0).is_err());
    }

    #[test]
    fn xl_image_is_stieltjes() {
        let f = xl_image("XL(1-e^-t)", Arc::new(|t: f64| -(-t).exp_m1()));
        let j = f.jet(2.0, 4).unwrap();
        for (k, c) in j.c.iter().enumerate() {
            // 1/(1+x) at 2: c_k = (−2/3)^k/3
            assert!((c - (-2.0f64 / 3.0).powi(k as i32) / 3.0).abs() < 1e-11, "{k}");
        }
        let r = check_stieltjes_order(&f, 1.0, 3, &Grid::log(0.2, 10.0, 8), 4, DEFAULT_CM_TOL).unwrap();
        assert!(r.is_verified(), "{r}");
    }
}
