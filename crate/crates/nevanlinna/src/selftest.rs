//! The acceptance criteria as runnable checks, shared by `nevanlinna selftest`
//! and the acceptance integration test.

use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::asymptotics::{
    binet_mu_direct, default_n3_grid, integrand_positivity_scan, nu_m, remainder_closed_form_n1, remainder_derivative,
    remainder_rnm, taylor_remainder_n1, truncation_sign_scan,
};
use crate::cases::{
    g_lambda_suite, gamma_ratio_integral, h_cm_threshold_check, h_stieltjes_check, unit_ball_sequence, xi, HFamily,
};
use crate::classes::{
    check_stieltjes_order, kristiansen_check, post_widder_density, registry_inclusion_suite, xl_image, xl_transform,
    InclusionConfig, DEFAULT_CM_TOL,
};
use crate::error::Result;
use crate::func::{builtin, registry::h_prime};
use crate::halfplane::{
    boundary_density, log_gamma_ratio, log_gamma_ratio_density, scaled_ladder, verify_log_gamma_ratio_representation,
    verify_pick, HalfPlaneGrid,
};
use crate::invgamma::{branch_inverse_g_k, extremal_points};
use crate::numerics::{integrate, Grid, QuadratureConfig};
use crate::special::{
    digamma, gamma, hurwitz_zeta_ds, lerch_theorem_residual, ln_gamma, log_barnes_g, log_gamma_principal,
    log_multiple_gamma, polygamma, LOG_SQRT_TWO_PI,
};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    /// Verdict on the criterion as written.
    pub passed: bool,
    /// For a criterion containing a clause that is false as stated: the verdict with only that clause
    /// replaced by the correct statement.
    pub amended: Option<bool>,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {:<16} {}", self.id, self.name, self.detail)?;
        if let Some(a) = self.amended {
            write!(f, "; amended: {}", if a { "pass" } else { "fail" })?;
        }
        write!(f, " ({:.2}s)", self.seconds)
    }
}

/// Outcome of one check before timing is attached.
pub struct Checked {
    pub passed: bool,
    pub amended: Option<bool>,
    pub detail: String,
}

impl From<(bool, String)> for Checked {
    fn from((passed, detail): (bool, String)) -> Self {
        Self { passed, amended: None, detail }
    }
}

type Check = fn() -> Result<Checked>;

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    /// Filter words accepted by `--only`.
    pub tags: &'static [&'static str],
    pub check: Check,
}

impl Criterion {
    pub fn matches(&self, filter: &str) -> bool {
        filter.split(',').map(str::trim).any(|w| w == self.id.to_string() || w == self.name || self.tags.contains(&w))
    }

    pub fn run(&self) -> CriterionOutcome {
        let start = Instant::now();
        let c = (self.check)().unwrap_or_else(|e| Checked { passed: false, amended: None, detail: format!("error: {e}") });
        CriterionOutcome {
            id: self.id,
            name: self.name,
            passed: c.passed,
            amended: c.amended,
            detail: c.detail,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "gamma-values", tags: &["gamma", "special"], check: c01_gamma_values },
        Criterion { id: 2, name: "log-gamma-branch", tags: &["gamma", "special", "branch"], check: c02_branch },
        Criterion { id: 3, name: "lerch", tags: &["zeta", "special"], check: c03_lerch },
        Criterion { id: 4, name: "multiple-gamma", tags: &["special", "barnes"], check: c04_multiple_gamma },
        Criterion { id: 5, name: "binet", tags: &["asymptotics"], check: c05_binet },
        Criterion { id: 6, name: "taylor-remainder", tags: &["asymptotics"], check: c06_taylor },
        Criterion { id: 7, name: "nu-density", tags: &["asymptotics"], check: c07_nu },
        Criterion { id: 8, name: "positivity", tags: &["asymptotics"], check: c08_positivity },
        Criterion { id: 9, name: "pick-log-gamma", tags: &["pick", "halfplane"], check: c09_pick },
        Criterion { id: 10, name: "unit-ball", tags: &["cases"], check: c10_unit_ball },
        Criterion { id: 11, name: "inverse-gamma", tags: &["invgamma", "pick"], check: c11_inverse_gamma },
        Criterion { id: 12, name: "h-family", tags: &["cases", "classes"], check: c12_h_family },
        Criterion { id: 13, name: "g-lambda", tags: &["cases", "classes"], check: c13_g_lambda },
        Criterion { id: 14, name: "gamma-ratio", tags: &["cases", "classes"], check: c14_gamma_ratio },
        Criterion { id: 15, name: "post-widder", tags: &["classes"], check: c15_post_widder },
        Criterion { id: 16, name: "xl-bijection", tags: &["classes"], check: c16_xl },
        Criterion { id: 17, name: "class-inclusion", tags: &["classes"], check: c17_inclusion },
    ]
}

/// Runs the criteria matching `filter` (all when `None`).
pub fn run_selftest(filter: Option<&str>) -> Vec<CriterionOutcome> {
    criteria().iter().filter(|c| filter.is_none_or(|f| c.matches(f))).map(Criterion::run).collect()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn c01_gamma_values() -> Result<Checked> {
    let half = rel(gamma(0.5)?, PI.sqrt());
    let mut worst: f64 = 0.0;
    let mut fact: u64 = 1;
    for n in 1..=20u64 {
        fact *= n;
        worst = worst.max(rel(gamma(n as f64 + 1.0)?, fact as f64));
    }
    Ok((half < 1e-12 && worst < 1e-13, format!("Γ(1/2) rel err {half:.1e}; max Γ(n+1)/n! rel err {worst:.1e}")).into())
}

/// Lanczos approximation (g = 7, 9 terms) with reflection: an oracle independent of the Stirling route.
pub fn gamma_lanczos(z: Complex64) -> Complex64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if z.re < 0.5 {
        return PI / ((z * PI).sin() * gamma_lanczos(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(C[0], 0.0);
    for (i, c) in C.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

fn c02_branch() -> Result<Checked> {
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let r = 0.2 * (60.0f64).powf(i as f64 / 19.0);
        for j in 0..10 {
            let th = 0.05 + (PI - 0.1) * j as f64 / 9.0;
            let z = Complex64::from_polar(r, th);
            let lib = log_gamma_principal(z)?.exp();
            let oracle = gamma_lanczos(z);
            worst = worst.max((lib - oracle).norm() / oracle.norm());
        }
    }
    // d/dθ log Γ(r e^{iθ}) = i z ψ(z); a branch jump would show up in the difference quotient
    let mut worst_d: f64 = 0.0;
    let h = 1e-5;
    for r in [0.5, 3.0, 12.0] {
        for j in 0..400 {
            let th = 0.01 + (PI - 0.02) * j as f64 / 399.0;
            let at = |t: f64| log_gamma_principal(Complex64::from_polar(r, t));
            let fd = (at(th + h)? - at(th - h)?) / (2.0 * h);
            let z = Complex64::from_polar(r, th);
            let exact = Complex64::i() * z * polygamma(0, z)?;
            worst_d = worst_d.max((fd - exact).norm() / exact.norm().max(1.0));
        }
    }
    Ok((worst < 1e-10 && worst_d < 1e-6, format!("200-point rel err vs Lanczos {worst:.1e}; arc θ-derivative err {worst_d:.1e}")).into())
}

fn c03_lerch() -> Result<Checked> {
    let mut worst: f64 = 0.0;
    for x in [0.5, 1.0, 2.0, 5.0] {
        worst = worst.max(lerch_theorem_residual(x, 1e-4)?);
    }
    Ok((worst < 1e-6, format!("max residual {worst:.1e}")).into())
}

fn c04_multiple_gamma() -> Result<Checked> {
    let mut e1: f64 = 0.0;
    let mut offsets = Vec::new();
    let mut spread: f64 = 0.0;
    for w in [1.0, 2.0, 3.0, 4.0] {
        e1 = e1.max((log_multiple_gamma(1, w, 4)? - (ln_gamma(w) - LOG_SQRT_TWO_PI)).abs());
        let l2 = log_multiple_gamma(2, w, 4)?;
        let g = log_barnes_g(Complex64::new(w, 0.0))?.re;
        offsets.push(l2 - (0.5 * w * (2.0 * PI).ln() - g));
        for n in 1..=2usize {
            let base = log_multiple_gamma(n, w, n)?;
            for m in n..=n + 6 {
                spread = spread.max((log_multiple_gamma(n, w, m)? - base).abs());
            }
        }
    }
    // normalization ζ_2′(0, 1) = ζ′(−1), computed here from the Hurwitz zeta derivative
    let zeta_prime = hurwitz_zeta_ds(-1.0, 1.0, 1e-4)?;
    let expected = zeta_prime - LOG_SQRT_TWO_PI;
    let e2 = offsets.iter().map(|o| (o - expected).abs()).fold(0.0, f64::max);
    let literal = offsets.iter().map(|o| o.abs()).fold(0.0, f64::max);
    let rest = e1 < 1e-9 && spread < 1e-9;
    Ok(Checked {
        passed: rest && literal < 1e-6,
        amended: Some(rest && e2 < 1e-6),
        detail: format!(
            "Γ_1 err {e1:.1e}; m-spread {spread:.1e}; log Γ_2 - log((2π)^(w/2)/G) = {:.9} (not 0); \
             matches ζ'(-1) - log√(2π) to {e2:.1e}",
            offsets[0]
        ),
    })
}

fn c05_binet() -> Result<Checked> {
    let mut bounds = true;
    let mut agree: f64 = 0.0;
    for x in [1.0, 2.0, 5.0, 10.0, 100.0] {
        let mu = binet_mu_direct(x);
        bounds &= mu > 0.0 && mu < 1.0 / (12.0 * x);
        agree = agree.max((mu - remainder_rnm(1, 1, x)?).abs());
    }
    Ok((bounds && agree < 1e-9, format!("0 < μ < 1/(12x): {bounds}; direct vs integral {agree:.1e}")).into())
}

fn c06_taylor() -> Result<Checked> {
    let mut worst: f64 = 0.0;
    for n in 1..=8 {
        for w in [0.25, 1.0, 3.0, 5.0] {
            worst = worst.max((remainder_closed_form_n1(n, w)? - taylor_remainder_n1(n, w)?).abs());
        }
    }
    Ok((worst < 1e-10, format!("max route difference {worst:.1e}")).into())
}

fn c07_nu() -> Result<Checked> {
    let mut min = f64::INFINITY;
    for m in 1..=4 {
        for t in Grid::log(1e-4, 1e3, 120).points() {
            min = min.min(nu_m(m, t)?);
        }
    }
    let cfg = QuadratureConfig::with_tolerances(1e-13, 1e-10);
    let mut laplace: f64 = 0.0;
    for (m, w) in [(1usize, 2.0), (2, 1.0), (3, 3.0)] {
        let p = 2 * m as i32 - 2;
        let lhs = integrate(|t| (-w * t).exp() * t.powi(p) * nu_m(m, t).unwrap_or(f64::NAN), 0.0, f64::INFINITY, &cfg)?.value;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        laplace = laplace.max((lhs - sign * remainder_rnm(2, 2 * m, w)?).abs());
    }
    let mut alternates = true;
    for m in 1..=3usize {
        let s = if m % 2 == 1 { 1.0 } else { -1.0 };
        for w in [0.5, 1.0, 2.0, 5.0] {
            // remainder_derivative already carries the (−1)^k, so alternation means one common sign
            for k in 0..=4 {
                alternates &= s * remainder_derivative(2, 2 * m, w, k)? > 0.0;
            }
        }
    }
    Ok((
        min >= 0.0 && laplace < 1e-7 && alternates,
        format!("min ν_m {min:.2e}; Laplace cross-check err {laplace:.1e}; derivative signs alternate: {alternates}"),
    ).into())
}

fn c08_positivity() -> Result<Checked> {
    let grid = default_n3_grid();
    let six = integrand_positivity_scan(3, 6, &grid)?;
    let seven = integrand_positivity_scan(3, 7, &grid)?;
    let odd = truncation_sign_scan(2, 3, &grid)?;
    let where_ = odd.witness.map(|w| format!(" at t = {:.3}", w.x)).unwrap_or_default();
    Ok((
        six.is_verified() && seven.is_verified() && odd.is_refuted(),
        format!("N=3 m=6: {}; m=7: {}; N=2 order 3 sign change found: {}{where_}", six.verdict, seven.verdict, odd.is_refuted()),
    ).into())
}

fn c09_pick() -> Result<Checked> {
    let pick = verify_pick("log_gamma_ratio", &log_gamma_ratio, &HalfPlaneGrid::default(), 1e-9)?;
    let rep = verify_log_gamma_ratio_representation(&[0.5, 2.0, 5.0, 10.0, 100.0], 1e-6)?;
    let integers: Vec<f64> = (0..=12).map(|k| -(k as f64)).collect();
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let s = 0.13 + 0.2437 * i as f64;
        let d = boundary_density(&log_gamma_ratio, -s, &scaled_ladder(-s, &integers)?)?.value;
        worst = worst.max((d - log_gamma_ratio_density(s)?).abs());
    }
    Ok((
        pick.is_verified() && rep.is_verified() && worst < 1e-4,
        format!("Pick on 100x100 grid: {}; representation: {}; boundary density err {worst:.1e}", pick.verdict, rep.verdict),
    ).into())
}

fn c10_unit_ball() -> Result<Checked> {
    let t = unit_ball_sequence(60)?;
    let last = t.rows.last().and_then(|r| r.root).unwrap_or(f64::NAN);
    let rest = t.decreasing && t.log_convex;
    Ok(Checked {
        passed: rest && t.approaches_sqrt_e,
        amended: Some(rest && t.approaches_limit),
        detail: format!(
            "decreasing {}; log-convex {}; |r_n - √e| decreasing {}; |r_n - e^(-1/2)| decreasing {} (r_60 = {last:.5})",
            t.decreasing, t.log_convex, t.approaches_sqrt_e, t.approaches_limit
        ),
    })
}

fn c11_inverse_gamma() -> Result<Checked> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    let mut upper = true;
    for k in 0..3usize {
        for _ in 0..20 {
            let z = Complex64::from_polar(rng.gen_range(0.05..20.0), rng.gen_range(0.02..PI - 0.02));
            let w = branch_inverse_g_k(k, z)?;
            upper &= w.im > 0.0;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            worst = worst.max((gamma_lanczos(w) - z * sign).norm() / z.norm());
        }
    }
    let x0 = extremal_points(0)?.entries[0];
    let bracket = x0.x > 1.46163 && x0.x < 1.46164;
    let residual = digamma(x0.x)?.abs();
    Ok((
        worst < 1e-10 && upper && bracket && residual < 1e-12,
        format!("Γ(g_k(z)) round trip err {worst:.1e}; Im g_k > 0: {upper}; x_0 = {:.10} with |ψ(x_0)| = {residual:.1e}", x0.x),
    ).into())
}

fn c12_h_family() -> Result<Checked> {
    let table = HFamily::default().tabulate(&crate::cases::default_t_grid())?;
    let low = table.scan(2.0, 1e-6);
    let high = table.scan(2.3, 1e-6);
    let f23 = high.witness.map(|w| (w.x, w.value));
    let b = table.bisect(2.0, 2.3, 1e-9)?;
    let cm = h_cm_threshold_check(&[2.25, 2.35])?;
    let sgrid = Grid::log(0.1, 20.0, 15);
    let s1 = h_stieltjes_check(1.0, &sgrid)?;
    let s15 = h_stieltjes_check(1.5, &sgrid)?;
    let lit1 = check_stieltjes_order(&h_prime(1.0), 1.0, 4, &sgrid, 12, DEFAULT_CM_TOL)?;
    let lit15 = check_stieltjes_order(&h_prime(1.5), 1.0, 4, &sgrid, 12, DEFAULT_CM_TOL)?;
    let rest = low.is_verified()
        && f23.is_some_and(|(_, v)| v < -1e-4)
        && b > 2.15
        && b < 2.22
        && cm[0].is_verified()
        && cm[1].is_refuted();
    let f23 = f23.map(|(t, v)| format!("F_2.3({t:.3}) = {v:.2e}")).unwrap_or_else(|| "no negative F_2.3".into());
    // h_a' decays like 1/x^2, faster than any nonzero Stieltjes function, so the S_1 clause is checked
    // as written and, for the amended verdict, on e^a - h_a
    Ok(Checked {
        passed: rest && lit1.is_verified() && lit15.is_refuted(),
        amended: Some(rest && s1.is_verified() && s15.is_refuted()),
        detail: format!(
            "F_2.0: {}; {f23}; b* ≈ {b:.4}; h'_2.25 CM {}; h'_2.35 CM {}; h'_a ∈ S_1 at a=1 {}, a=1.5 {}; \
             e^a - h_a ∈ S_1 at a=1 {}, a=1.5 {}",
            low.verdict, cm[0].verdict, cm[1].verdict, lit1.verdict, lit15.verdict, s1.verdict, s15.verdict
        ),
    })
}

fn c13_g_lambda() -> Result<Checked> {
    let mut xi_err: f64 = 0.0;
    for t in Grid::log(1e-3, 40.0, 50).points() {
        xi_err = xi_err.max((xi(2.0, t) + (-t).exp_m1()).abs());
    }
    let grid = Grid::log(0.1, 20.0, 15);
    let two = g_lambda_suite(2.0, &grid, 6, DEFAULT_CM_TOL)?;
    let three = g_lambda_suite(3.0, &grid, 6, DEFAULT_CM_TOL)?;
    let half = g_lambda_suite(0.5, &grid, 6, DEFAULT_CM_TOL)?;
    let ok = |r: &Option<crate::report::ClassReport>| r.as_ref().is_some_and(|r| r.is_verified());
    let passed = xi_err < 1e-12 && ok(&two.bernstein) && ok(&three.bernstein) && ok(&half.log_stieltjes_2);
    Ok((
        passed,
        format!(
            "ξ_2 err {xi_err:.1e}; x^(2-λ)g'_λ CM at λ=2 {}, λ=3 {}; log g_1/2 ∈ S_2 {}",
            ok(&two.bernstein),
            ok(&three.bernstein),
            ok(&half.log_stieltjes_2)
        ),
    ).into())
}

fn c14_gamma_ratio() -> Result<Checked> {
    let mut worst: f64 = 0.0;
    for (a, b, x) in [(1.0, 1.0, 2.0), (0.5, 2.0, 1.0), (2.0, 3.0, 0.5)] {
        let direct = ln_gamma(x) + ln_gamma(x + a + b) - ln_gamma(x + a) - ln_gamma(x + b);
        worst = worst.max((gamma_ratio_integral(a, b, x)? - direct).abs());
    }
    let grid = Grid::log(0.1, 20.0, 15);
    let k11 = kristiansen_check(1.0, 1.0, &grid, 3, 6, DEFAULT_CM_TOL)?;
    let k05 = kristiansen_check(0.5, 2.0, &grid, 3, 6, DEFAULT_CM_TOL)?;
    Ok((
        worst < 1e-8 && k11.is_verified() && k05.is_verified(),
        format!("identity err {worst:.1e}; S_2 and LCM at (1,1): {}, (0.5,2): {}", k11.verdict, k05.verdict),
    ).into())
}

fn c15_post_widder() -> Result<Checked> {
    let f = builtin("inv_one_plus")?;
    let mut exact: f64 = 0.0;
    let mut conv = true;
    let mut errs = Vec::new();
    for n in [1usize, 2, 5, 8, 32, 64, 128] {
        let v = post_widder_density(&f, 1.0, n)?;
        let closed = (n as f64 / (n as f64 + 1.0)).powi(n as i32 + 1);
        exact = exact.max(rel(v, closed));
        if [8, 32, 128].contains(&n) {
            let e = (v - (-1.0f64).exp()).abs();
            conv &= e < 0.5 / n as f64;
            errs.push(format!("n={n}: {e:.1e}"));
        }
    }
    Ok((exact < 1e-12 && conv, format!("closed-form rel err {exact:.1e}; |f_n(1) - 1/e| {}", errs.join(", "))).into())
}

fn c16_xl() -> Result<Checked> {
    let g = |t: f64| -(-t).exp_m1();
    let mut worst: f64 = 0.0;
    for x in Grid::log(0.05, 50.0, 10).points() {
        worst = worst.max((xl_transform(&g, x)? - 1.0 / (x + 1.0)).abs());
    }
    let image = xl_image("XL(1 - e^-t)", std::sync::Arc::new(g));
    let widder = check_stieltjes_order(&image, 1.0, 3, &Grid::log(0.2, 10.0, 8), 4, DEFAULT_CM_TOL)?;
    Ok((worst < 1e-10 && widder.is_verified(), format!("XL err {worst:.1e}; image ∈ S_1: {}", widder.verdict)).into())
}

fn c17_inclusion() -> Result<Checked> {
    let r = registry_inclusion_suite(&InclusionConfig::default());
    let bad: Vec<String> =
        r.inconsistencies.iter().map(|i| format!("{}: {} ⇏ {}", i.function, i.antecedent, i.consequent)).collect();
    Ok((
        bad.is_empty(),
        format!("{} functions, {} inconsistent pairs{}", r.rows.len(), bad.len(), if bad.is_empty() { String::new() } else { format!(": {}", bad.join("; ")) }),
    ).into())
}
