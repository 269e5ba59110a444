use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::bernoulli::{table, taylor_f64, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureConfig};

/// Non-remainder part of the large-w expansion of log Γ_N.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesExpansion {
    pub n: usize,
    pub m: usize,
    /// Coefficients (increasing powers of w) of the polynomial multiplying log w.
    pub log_term_coefficient: Vec<BigRational>,
    /// (exponent of w, coefficient).
    pub power_terms: Vec<(i32, BigRational)>,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(j))
}

fn check_nm(n: usize, m: usize) -> Result<()> {
    if !(1..=3).contains(&n) {
        return Err(Error::Domain(format!("N must be 1, 2 or 3, got {n}")));
    }
    if m < n {
        return Err(Error::Domain(format!("truncation order m = {m} must be at least N = {n}")));
    }
    if m > DEFAULT_MAX_ORDER {
        return Err(Error::OrderOverflow { order: m, max: DEFAULT_MAX_ORDER });
    }
    Ok(())
}

impl SeriesExpansion {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check_nm(n, m)?;
        let t = table(n)?;
        let sign_n = if n.is_multiple_of(2) { 1 } else { -1 };

        let nf = BigRational::from_integer(factorial(n));
        let log_term_coefficient = t
            .polynomial(n)?
            .into_iter()
            .map(|c| c * BigRational::from_integer((-sign_n).into()) / &nf)
            .collect();

        let mut power_terms = Vec::new();
        for k in 0..n {
            let harmonic = (1..=n - k).fold(BigRational::zero(), |acc, l| {
                acc + BigRational::new(1.into(), (l as i64).into())
            });
            let denom = BigRational::from_integer(factorial(k) * factorial(n - k));
            let c = BigRational::from_integer(sign_n.into()) * &t.values[k] / denom * harmonic;
            power_terms.push(((n - k) as i32, c));
        }
        for k in n + 1..=m {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = BigRational::from_integer(sign.into()) * &t.values[k] * BigRational::from_integer(factorial(k - n - 1))
                / BigRational::from_integer(factorial(k));
            if !c.is_zero() {
                power_terms.push((n as i32 - k as i32, c));
            }
        }
        Ok(Self { n, m, log_term_coefficient, power_terms })
    }

    pub fn terms(&self, w: f64) -> Result<f64> {
        if !(w > 0.0) {
            return Err(Error::Domain(format!("expansion needs w > 0, got {w}")));
        }
        let log_poly = self
            .log_term_coefficient
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * w + c.to_f64().unwrap());
        let powers: f64 = self
            .power_terms
            .iter()
            .map(|(e, c)| c.to_f64().unwrap() * w.powi(*e))
            .sum();
        Ok(log_poly * w.ln() + powers)
    }

    pub fn remainder(&self, w: f64) -> Result<f64> {
        remainder_rnm(self.n, self.m, w)
    }
}

/// All non-remainder terms of the expansion of log Γ_N(w).
pub fn expansion_terms(n: usize, m: usize, w: f64) -> Result<f64> {
    SeriesExpansion::new(n, m)?.terms(w)
}

/// How f − T_m is evaluated near t = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemainderConfig {
    /// Below this t the Taylor tail series is summed instead of subtracting.
    pub crossover: f64,
    pub extra_terms: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for RemainderConfig {
    fn default() -> Self {
        Self { crossover: 1.0, extra_terms: 20, abs_tol: 1e-15, rel_tol: 1e-12 }
    }
}

/// f(t) − T_m(t) for f(t) = (t/(1 − e^{−t}))^N, split at the crossover.
#[derive(Debug, Clone)]
pub struct TruncationError {
    pub n: usize,
    pub m: usize,
    coeffs: &'static [f64],
    crossover: f64,
    last: usize,
}

impl TruncationError {
    pub fn new(n: usize, m: usize, config: &RemainderConfig) -> Result<Self> {
        if !(1..=3).contains(&n) {
            return Err(Error::Domain(format!("N must be 1, 2 or 3, got {n}")));
        }
        let coeffs = taylor_f64(n)?;
        // The Taylor series of f has radius 2π; the tail must be summed well inside it.
        if !(config.crossover > 0.0 && config.crossover <= 2.0) {
            return Err(Error::Cancellation(format!(
                "crossover {} outside (0, 2]: tail series too slow or direct subtraction too lossy",
                config.crossover
            )));
        }
        let last = m + config.extra_terms;
        if last > DEFAULT_MAX_ORDER {
            return Err(Error::OrderOverflow { order: last, max: DEFAULT_MAX_ORDER });
        }
        let dropped = (config.crossover / (2.0 * std::f64::consts::PI)).powi(config.extra_terms as i32);
        if dropped > 1e-14 {
            return Err(Error::Cancellation(format!(
                "{} extra terms leave a relative tail of {dropped:.1e} at t = {}",
                config.extra_terms, config.crossover
            )));
        }
        Ok(Self { n, m, coeffs, crossover: config.crossover, last })
    }

    pub fn f(&self, t: f64) -> f64 {
        (t / -(-t).exp_m1()).powi(self.n as i32)
    }

    pub fn taylor(&self, t: f64) -> f64 {
        self.coeffs[..=self.m].iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    /// f(t) − T_m(t).
    pub fn value(&self, t: f64) -> f64 {
        if t < self.crossover {
            let tail = self.coeffs[self.m + 1..=self.last].iter().rev().fold(0.0, |acc, c| acc * t + c);
            tail * t.powi(self.m as i32 + 1)
        } else {
            self.f(t) - self.taylor(t)
        }
    }

    /// (f(t) − T_m(t))/t^p, without forming t^{m+1}/t^p separately for small t.
    pub fn value_over_power(&self, t: f64, p: i32) -> f64 {
        if t < self.crossover {
            let tail = self.coeffs[self.m + 1..=self.last].iter().rev().fold(0.0, |acc, c| acc * t + c);
            tail * t.powi(self.m as i32 + 1 - p)
        } else {
            (self.f(t) - self.taylor(t)) / t.powi(p)
        }
    }

    /// Σ |c_k t^k| + |f(t)|, the size of the rounding error in `value` up to a factor ε.
    pub fn scale(&self, t: f64) -> f64 {
        if t < self.crossover {
            return self.value(t).abs();
        }
        let mut s = self.f(t).abs();
        let mut p = 1.0;
        for c in &self.coeffs[..=self.m] {
            s += (c * p).abs();
            p *= t;
        }
        s
    }
}

/// ∫_0^∞ e^{−wt} t^{k−N−1}(f(t) − T_m(t)) dt, i.e. (−1)^k ∂_w^k R_{N,m}(w).
pub fn remainder_derivative_with(n: usize, m: usize, w: f64, k: usize, config: &RemainderConfig) -> Result<f64> {
    if !(w > 0.0) {
        return Err(Error::Domain(format!("remainder needs w > 0, got {w}")));
    }
    check_nm(n, m)?;
    let te = TruncationError::new(n, m, config)?;
    let p = n as i32 + 1 - k as i32;
    let integrand = move |t: f64| {
        if t == 0.0 {
            return 0.0;
        }
        (-w * t).exp() * te.value_over_power(t, p)
    };
    let cfg = QuadratureConfig::with_tolerances(config.abs_tol, config.rel_tol).breakpoints(vec![config.crossover]);
    Ok(integrate(integrand, 0.0, f64::INFINITY, &cfg)?.value)
}

pub fn remainder_derivative(n: usize, m: usize, w: f64, k: usize) -> Result<f64> {
    remainder_derivative_with(n, m, w, k, &RemainderConfig::default())
}

/// R_{N,m}(w).
pub fn remainder_rnm(n: usize, m: usize, w: f64) -> Result<f64> {
    remainder_derivative(n, m, w, 0)
}
