//! Extremal points of |Γ|, inversion of the principal log Γ and the branch
//! inverses g_k(z) = (log Γ)^{−1}(log z − i(k+1)π).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{digamma, ln_abs_gamma, log_gamma_principal, polygamma, polygamma_real};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExtremalPoint {
    pub k: usize,
    pub x: f64,
    pub log_abs_gamma: f64,
    /// |ψ(x_k)|
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalTable {
    pub entries: Vec<ExtremalPoint>,
}

/// Root of ψ in (lo, hi) where ψ(lo) < 0 < ψ(hi): bisection, then Newton with ψ′.
fn psi_root(lo: f64, hi: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    if !(digamma(a)? < 0.0 && digamma(b)? > 0.0) {
        return Err(Error::Bracket(lo, hi));
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if digamma(m)? < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..3 {
        let step = digamma(x)? / polygamma_real(1, x)?;
        if !(x - step > lo && x - step < hi) {
            break;
        }
        x -= step;
    }
    Ok(x)
}

/// x_0 on (0, ∞) and x_k on (−k, −k+1): the stationary points of log |Γ|.
pub fn extremal_points(k_max: usize) -> Result<ExtremalTable> {
    let mut entries = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let x = if k == 0 {
            psi_root(1.0, 2.0)?
        } else {
            // ψ → −∞ to the right of the pole −k and → +∞ to the left of −k + 1
            let left = -(k as f64);
            psi_root(left + 1e-9, left + 1.0 - 1e-9)?
        };
        entries.push(ExtremalPoint { k, x, log_abs_gamma: ln_abs_gamma(x)?, residual: digamma(x)?.abs() });
    }
    Ok(ExtremalTable { entries })
}

const MAX_NEWTON: usize = 100;
const MAX_HALVINGS: usize = 40;

fn in_domain(w: Complex64) -> bool {
    w.im > 0.0 || (w.im == 0.0 && w.re > 0.0)
}

/// Seed from w(log w − 1) = target, solved by Newton, or 2 + i for small targets.
pub fn default_seed(target: Complex64) -> Complex64 {
    if target.norm() < 3.0 {
        return Complex64::new(2.0, 1.0);
    }
    let mut w = target / (target + 2.0).ln();
    for _ in 0..20 {
        let next = w - (w * (w.ln() - 1.0) - target) / w.ln();
        if !next.is_finite() || !in_domain(next) {
            break;
        }
        w = next;
    }
    if in_domain(w) {
        w
    } else {
        Complex64::new(w.re.abs().max(1.0), w.im.abs().max(1e-3))
    }
}

fn residual(w: Complex64, target: Complex64) -> Result<Complex64> {
    Ok(log_gamma_principal(w)? - target)
}

/// Damped Newton from `seed`; the step is halved until the residual decreases.
fn newton(target: Complex64, seed: Complex64) -> Result<Complex64> {
    if !in_domain(seed) {
        return Err(Error::DomainEscape(seed));
    }
    let tol = 1e-14 * target.norm().max(1.0);
    let mut w = seed;
    let mut r = residual(w, target)?;
    for _ in 0..MAX_NEWTON {
        if r.norm() <= tol {
            return Ok(w);
        }
        let step = r / polygamma(0, w)?;
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let cand = w - step * t;
            if in_domain(cand) {
                let rc = residual(cand, target)?;
                if rc.norm() < r.norm() {
                    accepted = Some((cand, rc));
                    break;
                }
            }
            t *= 0.5;
        }
        let Some((cand, rc)) = accepted else {
            // no decrease along the Newton direction: at round-off level or outside the domain
            if r.norm() <= 1e3 * tol {
                return Ok(w);
            }
            let cand = w - step;
            return Err(if in_domain(cand) { Error::NonConvergence { value: w.norm(), error: r.norm() } } else { Error::DomainEscape(cand) });
        };
        if (cand - w).norm() <= 1e-16 * w.norm() {
            return Ok(cand);
        }
        w = cand;
        r = rc;
    }
    if r.norm() <= 1e3 * tol {
        return Ok(w);
    }
    Err(Error::NonConvergence { value: w.norm(), error: r.norm() })
}

/// Index k of the strip S_k = {−(k+1)π < Im ζ < −kπ}, if ζ lies in one.
pub fn strip_index(target: Complex64) -> Option<usize> {
    (target.im < 0.0 && (target.im / PI).fract() != 0.0).then(|| (-target.im / PI).floor() as usize)
}

/// A point of ℍ whose image lies in S_k: just above the interval (−k−1, −k),
/// whose upper edge is mapped onto Im ζ = −(k+1)π.
fn strip_anchor(k: usize) -> Result<Complex64> {
    let mut w = Complex64::new(-(k as f64) - 0.5, 0.5);
    for _ in 0..60 {
        let v = log_gamma_principal(w)?;
        if strip_index(v) == Some(k) {
            return Ok(w);
        }
        w.im *= 0.5;
    }
    Err(Error::DomainEscape(w))
}

/// Newton along the segment from log Γ(anchor) to `target` inside the convex strip S_k.
fn continuation(target: Complex64, k: usize) -> Result<Complex64> {
    let mut w = strip_anchor(k)?;
    let start = log_gamma_principal(w)?;
    const STEPS: usize = 32;
    for i in 1..=STEPS {
        let s = i as f64 / STEPS as f64;
        w = newton(start + (target - start) * s, w)?;
    }
    Ok(w)
}

/// w ∈ ℍ ∪ (0, ∞) with log Γ(w) = target.
///
/// On (0, ∞) log Γ is not injective; a real target resolves to the preimage nearest the seed's basin.
/// Without an explicit seed, a failed Newton run for a target in a strip S_k is retried by continuation.
pub fn invert_log_gamma(target: Complex64, seed: Option<Complex64>) -> Result<Complex64> {
    if !target.is_finite() {
        return Err(Error::Domain(format!("target must be finite, got {target}")));
    }
    match seed {
        Some(s) => newton(target, s),
        None => match newton(target, default_seed(target)) {
            Ok(w) => Ok(w),
            Err(e) => match strip_index(target) {
                Some(k) => continuation(target, k),
                None => Err(e),
            },
        },
    }
}

/// g_k(z) = (log Γ)^{−1}(log z − i(k+1)π), a Pick function with Γ(g_k(z)) = (−1)^{k+1} z.
pub fn branch_inverse_g_k(k: usize, z: Complex64) -> Result<Complex64> {
    if !(z.im > 0.0) {
        return Err(Error::Domain(format!("g_k is defined on the upper half-plane, got {z}")));
    }
    let target = z.ln() - Complex64::new(0.0, (k + 1) as f64 * PI);
    match newton(target, default_seed(target)) {
        Ok(w) if w.im > 0.0 => Ok(w),
        _ => continuation(target, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn extremal_table() {
        let t = extremal_points(6).unwrap();
        let x0 = t.entries[0].x;
        assert!(x0 > 1.46163 && x0 < 1.46164);
        assert!((t.entries[0].log_abs_gamma.exp() - 0.885_603_2).abs() < 1e-7);
        assert!((t.entries[1].x + 0.504_083_0).abs() < 1e-7);
        for e in &t.entries {
            assert!(e.residual < 1e-12, "{e:?}");
            if e.k > 0 {
                assert!(e.x > -(e.k as f64) && e.x < 1.0 - e.k as f64);
            }
            let here = ln_abs_gamma(e.x).unwrap();
            assert!(ln_abs_gamma(e.x + 1e-4).unwrap() > here && ln_abs_gamma(e.x - 1e-4).unwrap() > here);
        }
    }

    #[test]
    fn inversion_examples() {
        let w = c(3.0, 2.0);
        assert!((invert_log_gamma(log_gamma_principal(w).unwrap(), None).unwrap() - w).norm() < 1e-12);
        assert!((invert_log_gamma(c(24f64.ln(), 0.0), None).unwrap() - 5.0).norm() < 1e-12);
        let half = invert_log_gamma(c(PI.sqrt().ln(), 0.0), Some(c(0.4, 0.0))).unwrap();
        assert!((half - 0.5).norm() < 1e-12);
        assert!(matches!(invert_log_gamma(c(1.0, 0.0), Some(c(-1.0, 0.0))), Err(Error::DomainEscape(_))));
    }

    #[test]
    fn branch_round_trip() {
        for k in 0..3 {
            for z in [c(1.0, 1.0), c(-3.0, 0.2), c(0.01, 5.0), c(40.0, 0.5)] {
                let w = branch_inverse_g_k(k, z).unwrap();
                assert!(w.im > 0.0);
                let back = log_gamma_principal(w).unwrap().exp();
                let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
                assert!((back - z * sign).norm() < 1e-10 * z.norm(), "{k} {z}: {back}");
            }
        }
    }

    #[test]
    fn forward_then_invert() {
        for w in [c(-2.5, 0.3), c(-0.7, 0.1), c(0.5, 3.0)] {
            let lg = log_gamma_principal(w).unwrap();
            if let Some(k) = strip_index(lg) {
                let z = (lg + Complex64::new(0.0, (k + 1) as f64 * PI)).exp();
                assert!((branch_inverse_g_k(k, z).unwrap() - w).norm() < 1e-10, "{w}");
            }
        }
    }
}
