use std::f64::consts::PI;

use super::bernoulli::taylor_f64;
use super::expansion::remainder_rnm;
use crate::error::{Error, Result};
use crate::special::{hurwitz_zeta, ln_gamma, LOG_SQRT_TWO_PI};

/// Binet's μ(x) = log Γ(x) − (x − ½)log x + x − log √(2π).
///
/// Computed directly and through R_{1,1}; errors if the two differ by more than 1e-9.
pub fn binet_mu(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("binet_mu needs x > 0, got {x}")));
    }
    let direct = binet_mu_direct(x);
    let integral = remainder_rnm(1, 1, x)?;
    if (direct - integral).abs() > 1e-9 {
        return Err(Error::Disagreement { a: direct, b: integral });
    }
    Ok(direct)
}

pub fn binet_mu_direct(x: f64) -> f64 {
    ln_gamma(x) - (x - 0.5) * x.ln() + x - LOG_SQRT_TWO_PI
}

/// f(w) − T_n(w) for f(w) = w/(1 − e^{−w}) by plain subtraction.
pub fn taylor_remainder_n1(n: usize, w: f64) -> Result<f64> {
    let c = taylor_f64(1)?;
    if n >= c.len() {
        return Err(Error::OrderOverflow { order: n, max: c.len() - 1 });
    }
    let t = c[..=n].iter().rev().fold(0.0, |acc, c| acc * w + c);
    Ok(w / -(-w).exp_m1() - t)
}

/// f(w) − T_n(w) for f(w) = w/(1 − e^{−w}) from the partial fractions of coth:
/// 2(−1)^J w^{2J+2} Σ_{p≥1} (2πp)^{−2J}/((2πp)² + w²), J = ⌊n/2⌋.
pub fn remainder_closed_form_n1(n: usize, w: f64) -> Result<f64> {
    if n == 0 || !(w > 0.0) {
        return Err(Error::Domain(format!("need n ≥ 1 and w > 0 (n={n}, w={w})")));
    }
    let j = (n / 2) as i32;
    const P: usize = 16;
    let two_pi = 2.0 * PI;
    // summed right to left so small terms accumulate first
    let mut head = 0.0;
    for p in (1..=P).rev() {
        let a = two_pi * p as f64;
        head += a.powi(-2 * j) / (a * a + w * w);
    }
    // tail: Σ_{p>P} a^{−2J−2} Σ_i (−w²/a²)^i, exchanged and summed with Hurwitz ζ
    let ratio = w / (two_pi * (P + 1) as f64);
    if ratio >= 1.0 {
        return Err(Error::NonConvergence { value: head, error: f64::INFINITY });
    }
    let mut tail = 0.0;
    let mut converged = false;
    for i in 0..400 {
        let s = (2 + 2 * i + 2 * j as usize) as f64;
        let term = (-w * w).powi(i as i32) * two_pi.powf(-s) * hurwitz_zeta(s, (P + 1) as f64)?;
        tail += term;
        if term.abs() <= 1e-18 * (head + tail).abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { value: head + tail, error: ratio.powi(800) });
    }
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    Ok(2.0 * sign * w.powi(2 * j + 2) * (head + tail))
}
