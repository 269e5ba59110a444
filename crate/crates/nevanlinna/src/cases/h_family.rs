//! h_a(x) = (1 + 1/x)^{ax}, the Stieltjes function g = −ρ′/ρ and the
//! thresholds in a where h_a′ stops being LCM or CM.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{check_cm, check_stieltjes_order, DEFAULT_CM_TOL};
use crate::error::{Error, Result};
use crate::func::registry::{e_a_minus_h, h_prime};
use crate::halfplane::{boundary_density, scaled_ladder};
use crate::numerics::{integrate, Estimate, Grid, QuadratureConfig};
use crate::report::{ClassLabel, ClassReport, Witness};

/// ρ(x) = log(1 + 1/x) − 1/(1 + x).
pub fn rho(x: f64) -> f64 {
    (1.0 / x).ln_1p() - 1.0 / (1.0 + x)
}

/// g(x) = −ρ′(x)/ρ(x), with ρ′(x) = −1/(x(1+x)²).
pub fn g_value(x: f64) -> f64 {
    1.0 / (x * (1.0 + x) * (1.0 + x) * rho(x))
}

pub fn g_complex(z: Complex64) -> Complex64 {
    let r = (z.inv() + 1.0).ln() - (z + 1.0).inv();
    (z * (z + 1.0) * (z + 1.0) * r).inv()
}

pub fn h_value(a: f64, x: f64) -> f64 {
    (a * x * (1.0 / x).ln_1p()).exp()
}

/// Closed form of τ from Im ρ(−s + i0) = −π:
/// τ(s) = 1/(s(1−s)²(A² + π²)), A = log((1−s)/s) − 1/(1−s).
pub fn tau_closed(s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("τ lives on (0, 1), got {s}")));
    }
    let a = ((1.0 - s) / s).ln() - 1.0 / (1.0 - s);
    Ok(1.0 / (s * (1.0 - s) * (1.0 - s) * (a * a + PI * PI)))
}

/// τ(s) = −(1/π) Im[g(−s + i0) − 1/(1 − s + i0)], by boundary extraction.
pub fn tau_boundary(s: f64) -> Result<Estimate> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Domain(format!("τ lives on (0, 1), got {s}")));
    }
    let f = |z: Complex64| Ok(-(g_complex(z) - (z + 1.0).inv()));
    // τ varies on the scale of s itself near 0, so the ladder is taken finer than the default
    let ladder: Vec<f64> = scaled_ladder(-s, &[0.0, -1.0])?.iter().map(|y| y * TAU_LADDER_SHRINK).collect();
    boundary_density(&f, -s, &ladder)
}

const TAU_LADDER_SHRINK: f64 = 0.125;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TauSource {
    /// Boundary values of g, as the integral representation prescribes.
    Boundary,
    /// The closed form, used as an oracle.
    Closed,
}

/// Integrals against τ are taken in u = −log s. Beyond `U_CUT` (s < e^{−40})
/// τ(s)s = 1/((u−1)² + π²) up to O(s), and the remainder is integrated exactly.
const U_CUT: f64 = 40.0;

#[derive(Debug, Clone, Copy)]
pub struct HFamily {
    pub source: TauSource,
}

impl Default for HFamily {
    fn default() -> Self {
        Self { source: TauSource::Boundary }
    }
}

impl HFamily {
    pub fn new(source: TauSource) -> Self {
        Self { source }
    }

    pub fn tau(&self, s: f64) -> Result<f64> {
        match self.source {
            TauSource::Boundary => Ok(tau_boundary(s)?.value),
            TauSource::Closed => tau_closed(s),
        }
    }

    /// ∫_0^1 τ(s) w(s) ds for a weight continuous on [0, 1].
    fn against_tau(&self, w: impl Fn(f64) -> f64 + Sync) -> Result<f64> {
        let cfg = QuadratureConfig::with_tolerances(1e-12, 1e-10).breakpoints(vec![1.0, 5.0]);
        let body = integrate(
            |u: f64| {
                let s = (-u).exp();
                self.tau(s).map(|t| t * s * w(s)).unwrap_or(f64::NAN)
            },
            0.0,
            U_CUT,
            &cfg,
        )?;
        let tail = (0.5 - ((U_CUT - 1.0) / PI).atan() / PI) * w(0.0);
        Ok(body.value + tail)
    }

    /// ∫_0^1 τ = 1.
    pub fn tau_mass(&self) -> Result<f64> {
        self.against_tau(|_| 1.0)
    }

    /// t_n = ∫_0^1 s^n τ(1 − s) ds.
    pub fn moments(&self, n_max: usize) -> Result<Vec<f64>> {
        (0..=n_max).into_par_iter().map(|n| self.against_tau(|s| (1.0 - s).powi(n as i32))).collect()
    }

    /// The a-independent part P(t) = e^{−t} + ∫τ(s)e^{−st}ds and Q(t) = (1−e^{−t})/t − e^{−t},
    /// so that F_a = P − aQ.
    fn parts(&self, t: f64) -> Result<(f64, f64)> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("t must be positive, got {t}")));
        }
        let e = (-t).exp();
        let p = e + self.against_tau(|s| (-s * t).exp())?;
        let q = -(-t).exp_m1() / t - e;
        Ok((p, q))
    }

    /// F_a(t) = (1+a)e^{−t} + ∫_0^1 τ(s)e^{−st} ds − a(1−e^{−t})/t.
    pub fn f_a(&self, a: f64, t: f64) -> Result<f64> {
        let (p, q) = self.parts(t)?;
        Ok(p - a * q)
    }

    /// P and Q on the grid, shared by scans and bisection.
    pub fn tabulate(&self, grid: &Grid) -> Result<FTable> {
        let ts = grid.points();
        let pq = ts.par_iter().map(|&t| self.parts(t)).collect::<Result<Vec<_>>>()?;
        Ok(FTable { grid: *grid, t: ts, p: pq.iter().map(|v| v.0).collect(), q: pq.iter().map(|v| v.1).collect() })
    }
}

/// Tabulated F_a = P − aQ.
#[derive(Debug, Clone)]
pub struct FTable {
    pub grid: Grid,
    pub t: Vec<f64>,
    pub p: Vec<f64>,
    pub q: Vec<f64>,
}

impl FTable {
    /// (t, F_a(t)) at the grid minimum.
    pub fn minimum(&self, a: f64) -> (f64, f64) {
        (0..self.t.len())
            .map(|i| (self.t[i], self.p[i] - a * self.q[i]))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("non-empty grid")
    }

    /// F_a ≥ −tol on the grid, as a Horn–Bernstein report for h_a.
    pub fn scan(&self, a: f64, tol: f64) -> ClassReport {
        let (t, v) = self.minimum(a);
        let r = ClassReport::new(format!("h:{a}"), ClassLabel::HornBernstein, self.grid.to_string(), 0, tol);
        if v < -tol {
            r.refute(Witness::real(t, 0, v))
        } else {
            r.note(format!("min F_a = {v:.3e} at t = {t:.3e}"))
        }
    }

    /// Bisection on a for the predicate "F_a ≥ −tol on the grid".
    pub fn bisect(&self, lo: f64, hi: f64, tol: f64) -> Result<f64> {
        let ok = |a: f64| self.minimum(a).1 >= -tol;
        if !(ok(lo) && !ok(hi)) {
            return Err(Error::Bracket(lo, hi));
        }
        let (mut lo, mut hi) = (lo, hi);
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            if ok(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// Default t grid for F_a scans.
pub fn default_t_grid() -> Grid {
    Grid::log(1e-3, 1e3, 400)
}

/// Threshold b* such that h_a′ is LCM iff a ≤ b*, bisected inside `bracket`.
pub fn h_threshold_bisect(family: &HFamily, bracket: (f64, f64), tol: f64) -> Result<f64> {
    family.tabulate(&default_t_grid())?.bisect(bracket.0, bracket.1, tol)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct HComponents {
    pub h: f64,
    pub rho: f64,
    /// ρ as ∫ e^{−xt}((1−e^{−t})/t − e^{−t}) dt.
    pub rho_laplace: f64,
    pub g: f64,
    pub f_a: f64,
}

pub fn h_family_components(family: &HFamily, a: f64, x: f64, t: f64) -> Result<HComponents> {
    if !(a >= 0.0 && x > 0.0) {
        return Err(Error::Domain(format!("need a ≥ 0 and x > 0 (a={a}, x={x})")));
    }
    let kernel = |s: f64| {
        let q = if s < 1e-4 { s / 2.0 - s * s / 3.0 + s * s * s / 8.0 } else { -(-s).exp_m1() / s - (-s).exp() };
        (-x * s).exp() * q
    };
    let cfg = QuadratureConfig::with_tolerances(1e-14, 1e-12);
    let rho_laplace = integrate(kernel, 0.0, f64::INFINITY, &cfg)?.value;
    Ok(HComponents { h: h_value(a, x), rho: rho(x), rho_laplace, g: g_value(x), f_a: family.f_a(a, t)? })
}

/// Sampled τ and moments: the state behind the threshold computations.
#[derive(Debug, Clone, Serialize)]
pub struct HFamilyState {
    pub a: f64,
    pub tau_samples: Vec<(f64, f64)>,
    pub moments: Vec<f64>,
    pub tau_nonnegative: bool,
    pub moments_decreasing: bool,
    /// (−1)^k Δ^k t_n ≥ 0 for k ≤ 6.
    pub hausdorff: bool,
}

pub fn h_moment_sequence(family: &HFamily, n_max: usize) -> Result<Vec<f64>> {
    family.moments(n_max)
}

/// (−1)^k Δ^k t_n ≥ −tol for all k ≤ k_max where defined.
pub fn hausdorff_check(moments: &[f64], k_max: usize, tol: f64) -> bool {
    let mut diff = moments.to_vec();
    for k in 0..=k_max {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        if diff.iter().any(|d| sign * d < -tol) {
            return false;
        }
        diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
    }
    true
}

pub fn h_family_state(family: &HFamily, a: f64, tau_points: usize, n_max: usize) -> Result<HFamilyState> {
    let tau_samples = (1..=tau_points)
        .map(|i| {
            let s = i as f64 / (tau_points + 1) as f64;
            family.tau(s).map(|v| (s, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let moments = family.moments(n_max)?;
    Ok(HFamilyState {
        a,
        tau_nonnegative: tau_samples.iter().all(|&(_, v)| v >= 0.0),
        moments_decreasing: moments.windows(2).all(|w| w[1] < w[0]),
        hausdorff: hausdorff_check(&moments, 6, 1e-9),
        tau_samples,
        moments,
    })
}

/// Grid and order for the CM scans of h_a′; the defect near a* ≈ 2.3 shows only at high order.
pub fn h_cm_grid() -> Grid {
    Grid::log(0.05, 300.0, 60)
}

pub const H_CM_ORDER: usize = 160;

/// check_cm on h_a′ at each a.
pub fn h_cm_threshold_check(a_values: &[f64]) -> Result<Vec<ClassReport>> {
    a_values.iter().map(|&a| check_cm(&h_prime(a), 0.0, &h_cm_grid(), H_CM_ORDER, DEFAULT_CM_TOL)).collect()
}

/// S_1 membership of e^a − h_a, the Stieltjes function whose derivative is −h_a′.
pub fn h_stieltjes_check(a: f64, grid: &Grid) -> Result<ClassReport> {
    check_stieltjes_order(&e_a_minus_h(a), 1.0, 4, grid, 12, DEFAULT_CM_TOL)
}
