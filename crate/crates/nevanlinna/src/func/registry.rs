//! Built-in functions, addressable by id strings such as `exp_neg` or `h_prime:2.25`.

use num_complex::Complex64;

use super::{Func, Jet};
use crate::asymptotics::remainder_derivative;
use crate::error::{Error, Result};
use crate::special::{
    hyp2f1_special, incomplete_gamma, lerch_phi_scaled, ln_gamma, log_gamma_principal, polygamma, LOG_SQRT_TWO_PI,
};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Jet of F from the jet `d` of F′ and the value F(x).
fn antiderivative(value: f64, d: &Jet) -> Jet {
    let mut out = vec![value];
    for k in 1..=d.order() + 1 {
        out.push(d.x * d.c[k - 1] / k as f64);
    }
    Jet { x: d.x, c: out }
}

pub fn exp_neg() -> Func {
    Func::from_jet("exp_neg", |x, n| Ok(Jet::exp_linear(x, 1.0, n))).with_complex(|z| Ok((-z).exp()))
}

pub fn inv() -> Func {
    Func::from_jet("inv", |x, n| Ok(Jet::power(x, -1.0, n))).with_complex(|z| Ok(z.inv()))
}

pub fn inv_sqrt() -> Func {
    Func::from_jet("inv_sqrt", |x, n| Ok(Jet::power(x, -0.5, n))).with_complex(|z| Ok(z.powf(-0.5)))
}

pub fn inv_one_plus() -> Func {
    Func::from_jet("inv_one_plus", |x, n| Ok(Jet::recip_shifted(x, 1.0, n))).with_complex(|z| Ok((z + 1.0).inv()))
}

pub fn log1p_inv() -> Func {
    Func::from_jet("log1p_inv", |x, n| Ok(Jet::ln1p_inv(x, n))).with_complex(|z| Ok((z.inv() + 1.0).ln()))
}

pub fn identity() -> Func {
    Func::from_jet("identity", |x, n| Ok(Jet::variable(x, n))).with_complex(Ok)
}

pub fn square() -> Func {
    Func::from_jet("square", |x, n| Ok(Jet::power(x, 2.0, n))).with_complex(|z| Ok(z * z))
}

/// x^{−λ} + 1.
pub fn inv_pow_plus_one(lambda: f64) -> Func {
    Func::from_jet(format!("inv_pow_plus_one:{lambda}"), move |x, n| Ok(Jet::power(x, -lambda, n).add_constant(1.0)))
        .with_complex(move |z| Ok(z.powf(-lambda) + 1.0))
}

const RATIO_SERIES_ORDER: usize = 60;

/// Jet of log Γ(y+1)/(y log y) near y = 1, through the Taylor series at 1.
fn log_gamma_ratio_jet_near_one(x: f64, n: usize) -> Result<Jet> {
    let k = RATIO_SERIES_ORDER.max(n + 20);
    // numerator and denominator at 1 + u, both divided by u
    let num = Jet::ln_gamma_shifted(1.0, 1.0, k + 1)?;
    let den = &Jet::variable(1.0, k + 1) * &Jet::ln_variable(1.0, k + 1);
    let num = Jet { x: 1.0, c: num.c[1..].to_vec() };
    let den = Jet { x: 1.0, c: den.c[1..].to_vec() };
    let mut a = num.div(&den)?.c;
    // Taylor shift u = δ + w, then w = x v
    let delta = x - 1.0;
    let len = a.len();
    for i in 0..len {
        for j in (i..len - 1).rev() {
            let next = a[j + 1];
            a[j] += delta * next;
        }
    }
    let mut p = 1.0;
    let mut out = Vec::with_capacity(n + 1);
    for coeff in a.iter().take(n + 1) {
        out.push(coeff * p);
        p *= x;
    }
    Ok(Jet { x, c: out })
}

/// log Γ(x+1)/(x log x), with its removable singularity at x = 1.
pub fn log_gamma_ratio() -> Func {
    Func::from_jet("log_gamma_ratio", |x, n| {
        if (x - 1.0).abs() < 0.5 {
            return log_gamma_ratio_jet_near_one(x, n);
        }
        let num = Jet::ln_gamma_shifted(x, 1.0, n)?;
        let den = &Jet::variable(x, n) * &Jet::ln_variable(x, n);
        num.div(&den)
    })
    .with_complex(|z| Ok(log_gamma_principal(z + 1.0)? / (z * z.ln())))
}

/// log(Γ(x)Γ(x+a+b)/(Γ(x+a)Γ(x+b))).
pub fn gamma_ratio(a: f64, b: f64) -> Func {
    Func::from_jet(format!("gamma_ratio:{a}:{b}"), move |x, n| {
        let p = &Jet::ln_gamma_shifted(x, 0.0, n)? + &Jet::ln_gamma_shifted(x, a + b, n)?;
        let q = &Jet::ln_gamma_shifted(x, a, n)? + &Jet::ln_gamma_shifted(x, b, n)?;
        Ok(&p - &q)
    })
    .with_complex(move |z| {
        Ok(log_gamma_principal(z)? + log_gamma_principal(z + (a + b))?
            - log_gamma_principal(z + a)?
            - log_gamma_principal(z + b)?)
    })
}

/// γ(λ, x).
pub fn incomplete_gamma_fn(lambda: f64) -> Func {
    Func::from_jet(format!("incomplete_gamma:{lambda}"), move |x, n| {
        let value = incomplete_gamma(lambda, x)?;
        if n == 0 {
            return Ok(Jet::constant(x, value, 0));
        }
        let d = &Jet::power(x, lambda - 1.0, n - 1) * &Jet::exp_linear(x, 1.0, n - 1);
        Ok(antiderivative(value, &d))
    })
}

/// x^λ Φ(−x, 1, λ).
pub fn lerch_scaled_fn(lambda: f64) -> Func {
    Func::from_jet(format!("lerch_scaled:{lambda}"), move |x, n| {
        let value = lerch_phi_scaled(x, lambda)?;
        if n == 0 {
            return Ok(Jet::constant(x, value, 0));
        }
        let d = &Jet::power(x, lambda - 1.0, n - 1) * &Jet::recip_shifted(x, 1.0, n - 1);
        Ok(antiderivative(value, &d))
    })
}

/// x^λ ₂F₁(ν, λ; 1+λ; −x).
pub fn hyp2f1_fn(nu: f64, lambda: f64) -> Func {
    Func::from_jet(format!("hyp2f1:{nu}:{lambda}"), move |x, n| {
        let value = hyp2f1_special(nu, lambda, x)?;
        if n == 0 {
            return Ok(Jet::constant(x, value, 0));
        }
        let d = (&Jet::power(x, lambda - 1.0, n - 1) * &Jet::ln_shifted(x, 1.0, n - 1).scale(-nu).exp()).scale(lambda);
        Ok(antiderivative(value, &d))
    })
}

/// Binet's μ(x) = log Γ(x) − (x − ½) log x + x − log √(2π).
pub fn binet_mu_fn() -> Func {
    Func::from_jet("binet_mu", |x, n| {
        let lg = Jet::ln_gamma_shifted(x, 0.0, n)?;
        let stirling = &Jet::variable(x, n).add_constant(-0.5) * &Jet::ln_variable(x, n);
        Ok((&(&lg - &stirling) + &Jet::variable(x, n)).add_constant(-LOG_SQRT_TWO_PI))
    })
    .with_complex(|z| Ok(log_gamma_principal(z)? - (z - 0.5) * z.ln() + z - LOG_SQRT_TWO_PI))
}

/// (−1)^{m−1} R_{2,2m}(x), derivatives by differentiating under the integral.
pub fn remainder_r2(m: usize) -> Func {
    Func::from_jet(format!("remainder_r2:{m}"), move |x, n| {
        let s = if m % 2 == 1 { 1.0 } else { -1.0 };
        let mut out = Vec::with_capacity(n + 1);
        let mut scale = 1.0;
        for k in 0..=n {
            if k > 0 {
                scale *= x / k as f64;
            }
            let d = remainder_derivative(2, 2 * m, x, k)?;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            out.push(s * sign * d * scale);
        }
        Ok(Jet { x, c: out })
    })
}

fn h_jet(a: f64, x: f64, n: usize) -> Jet {
    (&Jet::variable(x, n) * &Jet::ln1p_inv(x, n)).scale(a).exp()
}

fn h_complex(a: f64, z: Complex64) -> Complex64 {
    (z * (z.inv() + 1.0).ln() * a).exp()
}

/// h_a(x) = (1 + 1/x)^{ax}.
pub fn h_a(a: f64) -> Func {
    Func::from_jet(format!("h:{a}"), move |x, n| Ok(h_jet(a, x, n))).with_complex(move |z| Ok(h_complex(a, z)))
}

/// ρ(x) = log(1 + 1/x) − 1/(1 + x).
pub fn rho() -> Func {
    Func::from_jet("rho", |x, n| Ok(&Jet::ln1p_inv(x, n) - &Jet::recip_shifted(x, 1.0, n)))
        .with_complex(|z| Ok((z.inv() + 1.0).ln() - (z + 1.0).inv()))
}

/// h_a′ = a h_a ρ.
pub fn h_prime(a: f64) -> Func {
    Func::from_jet(format!("h_prime:{a}"), move |x, n| Ok(h_jet(a, x, n + 1).derivative())).with_complex(move |z| {
        let r = (z.inv() + 1.0).ln() - (z + 1.0).inv();
        Ok(h_complex(a, z) * r * a)
    })
}

/// e^a − h_a.
pub fn e_a_minus_h(a: f64) -> Func {
    Func::from_jet(format!("e_a_minus_h:{a}"), move |x, n| Ok((-h_jet(a, x, n)).add_constant(a.exp())))
        .with_complex(move |z| Ok(c(a.exp()) - h_complex(a, z)))
}

/// g = −ρ′/ρ.
pub fn g_h() -> Func {
    Func::from_jet("g_h", |x, n| {
        let r = &Jet::ln1p_inv(x, n + 1) - &Jet::recip_shifted(x, 1.0, n + 1);
        Ok(-r.ln()?.derivative())
    })
    .with_complex(|z| {
        let r = (z.inv() + 1.0).ln() - (z + 1.0).inv();
        let dr = -(z * (z + 1.0)).inv() + (z + 1.0).powi(-2);
        Ok(-dr / r)
    })
}

/// g_λ(x) = x^λ Γ(x)/Γ(x+λ).
pub fn g_lambda(lambda: f64) -> Func {
    Func::from_jet(format!("g_lambda:{lambda}"), move |x, n| {
        let l = &(&Jet::ln_variable(x, n).scale(lambda) + &Jet::ln_gamma_shifted(x, 0.0, n)?)
            - &Jet::ln_gamma_shifted(x, lambda, n)?;
        Ok(l.exp())
    })
    .with_complex(move |z| Ok((z.ln() * lambda + log_gamma_principal(z)? - log_gamma_principal(z + lambda)?).exp()))
}

/// σ_λ(x) = λ/x + ψ(x) − ψ(x+λ).
pub fn sigma_lambda(lambda: f64) -> Func {
    Func::from_jet(format!("sigma_lambda:{lambda}"), move |x, n| {
        let p = &Jet::polygamma_shifted(0, x, 0.0, n)? - &Jet::polygamma_shifted(0, x, lambda, n)?;
        Ok(&Jet::power(x, -1.0, n).scale(lambda) + &p)
    })
    .with_complex(move |z| Ok(z.inv() * lambda + polygamma(0, z)? - polygamma(0, z + lambda)?))
}

pub fn trigamma() -> Func {
    Func::from_jet("trigamma", |x, n| Jet::polygamma_shifted(1, x, 0.0, n)).with_complex(|z| polygamma(1, z))
}

/// log Γ(x) is not positive everywhere; kept for evaluation only.
pub fn log_gamma() -> Func {
    Func::from_jet("log_gamma", |x, n| Jet::ln_gamma_shifted(x, 0.0, n))
        .with_eval(|x| Ok(ln_gamma(x)))
        .with_complex(log_gamma_principal)
}

fn parse_params(id: &str) -> Result<(&str, Vec<f64>)> {
    let mut parts = id.split(':');
    let head = parts.next().unwrap_or_default();
    let params = parts
        .map(|p| p.trim().parse::<f64>().map_err(|e| Error::Parse(format!("parameter '{p}' in '{id}': {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((head, params))
}

fn arity(id: &str, params: &[f64], n: usize, defaults: &[f64]) -> Result<Vec<f64>> {
    match params.len() {
        0 => Ok(defaults.to_vec()),
        k if k == n => Ok(params.to_vec()),
        k => Err(Error::Parse(format!("'{id}' takes {n} parameter(s), got {k}"))),
    }
}

/// Looks up a built-in function by id.
pub fn builtin(id: &str) -> Result<Func> {
    let (head, params) = parse_params(id)?;
    let p = |n: usize, d: &[f64]| arity(id, &params, n, d);
    let f = match head {
        "exp_neg" => exp_neg(),
        "inv" => inv(),
        "inv_sqrt" => inv_sqrt(),
        "inv_one_plus" => inv_one_plus(),
        "log1p_inv" => log1p_inv(),
        "identity" => identity(),
        "square" => square(),
        "inv_pow_plus_one" => inv_pow_plus_one(p(1, &[3.0])?[0]),
        "log_gamma_ratio" => log_gamma_ratio(),
        "log_gamma" => log_gamma(),
        "gamma_ratio" => {
            let v = p(2, &[1.0, 1.0])?;
            gamma_ratio(v[0], v[1])
        }
        "incomplete_gamma" => incomplete_gamma_fn(p(1, &[2.0])?[0]),
        "lerch_scaled" => lerch_scaled_fn(p(1, &[0.5])?[0]),
        "hyp2f1" => {
            let v = p(2, &[1.0, 1.0])?;
            hyp2f1_fn(v[0], v[1])
        }
        "binet_mu" => binet_mu_fn(),
        "remainder_r2" => {
            let m = p(1, &[2.0])?[0];
            if m < 1.0 || m.fract() != 0.0 {
                return Err(Error::Parse(format!("remainder_r2 needs a positive integer m, got {m}")));
            }
            remainder_r2(m as usize)
        }
        "h" => h_a(p(1, &[1.0])?[0]),
        "h_prime" => h_prime(p(1, &[1.0])?[0]),
        "e_a_minus_h" => e_a_minus_h(p(1, &[1.0])?[0]),
        "rho" => rho(),
        "g_h" => g_h(),
        "g_lambda" => g_lambda(p(1, &[2.0])?[0]),
        "sigma_lambda" => sigma_lambda(p(1, &[2.0])?[0]),
        "trigamma" => trigamma(),
        _ => return Err(Error::Parse(format!("unknown function id '{id}'"))),
    };
    Ok(f.renamed(id))
}

/// Ids of the registry used by the class-inclusion suite.
pub fn registry_ids() -> Vec<&'static str> {
    vec![
        "exp_neg",
        "inv",
        "inv_sqrt",
        "inv_one_plus",
        "log1p_inv",
        "identity",
        "square",
        "inv_pow_plus_one:3",
        "log_gamma_ratio",
        "gamma_ratio:1:1",
        "gamma_ratio:0.5:2",
        "incomplete_gamma:2",
        "lerch_scaled:0.5",
        "hyp2f1:1:1",
        "binet_mu",
        "remainder_r2:2",
        "h:1",
        "h_prime:1",
        "h_prime:2.25",
        "e_a_minus_h:1",
        "rho",
        "g_h",
        "g_lambda:0.5",
        "g_lambda:2",
        "sigma_lambda:2",
        "trigamma",
    ]
}

pub fn registry() -> Vec<Func> {
    registry_ids().into_iter().map(|id| builtin(id).expect("registry ids parse")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn every_id_resolves_and_evaluates() {
        for f in registry() {
            let v = f.eval(2.5).unwrap();
            assert!(v.is_finite(), "{}", f.name());
            let j = f.jet(2.5, 3).unwrap();
            assert!(close(j.c[0], v, 1e-12), "{}: {} vs {v}", f.name(), j.c[0]);
        }
        assert!(builtin("nope").is_err());
        assert!(builtin("gamma_ratio:1").is_err());
    }

    #[test]
    fn ratio_values() {
        let f = log_gamma_ratio();
        assert!(close(f.eval(2.0).unwrap(), 0.5, 1e-14));
        // limit at 1 is ψ(2) = 1 − γ
        assert!(close(f.eval(1.0).unwrap(), 1.0 - crate::special::EULER_GAMMA, 1e-12));
        // both jet routes agree away from the switch point
        let a = log_gamma_ratio_jet_near_one(1.45, 6).unwrap();
        let num = Jet::ln_gamma_shifted(1.45, 1.0, 6).unwrap();
        let den = &Jet::variable(1.45, 6) * &Jet::ln_variable(1.45, 6);
        let b = num.div(&den).unwrap();
        for k in 0..=6 {
            assert!(close(a.c[k], b.c[k], 1e-10), "k={k}: {} vs {}", a.c[k], b.c[k]);
        }
    }

    #[test]
    fn jets_match_finite_differences() {
        for id in ["incomplete_gamma:2", "lerch_scaled:0.5", "hyp2f1:2:1.5", "h_prime:2", "g_lambda:0.5", "binet_mu"] {
            let f = builtin(id).unwrap();
            let g = f.clone();
            let numeric = Func::new("n", move |x| g.eval(x));
            let a = f.jet(1.7, 3).unwrap();
            let b = numeric.jet(1.7, 3).unwrap();
            for k in 0..=3 {
                let tol = if k == 3 { 1e-3 } else { 1e-6 };
                assert!((a.c[k] - b.c[k]).abs() < tol * (1.0 + a.c[k].abs()), "{id} k={k}: {} vs {}", a.c[k], b.c[k]);
            }
        }
    }

    #[test]
    fn complex_matches_real() {
        for f in registry() {
            if let Some(v) = f.complex(Complex64::new(2.5, 0.0)) {
                let v = v.unwrap();
                assert!(close(v.re, f.eval(2.5).unwrap(), 1e-12) && v.im.abs() < 1e-12, "{}", f.name());
            }
        }
    }
}
