use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::func::Func;
use crate::halfplane::{verify_pick, HalfPlaneGrid};
use crate::numerics::Grid;
use crate::report::{ClassLabel, ClassReport, Verdict, Witness};

/// Tolerance on (−1)^k c_k relative to |f(x)| + 1.
pub const DEFAULT_CM_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy)]
struct Defect {
    x: f64,
    order: usize,
    /// (−1)^k c_k / (|c_0| + 1)
    scaled: f64,
    /// (−1)^k f^{(k)}(x)
    derivative: f64,
    /// the error bound could account for the violation
    within_error: bool,
}

fn scan_point(f: &Func, x: f64, max_order: usize, tol: f64) -> Result<Option<Defect>> {
    let est = f.jet_estimate(x, max_order)?;
    let scale = est.jet.c[0].abs() + 1.0;
    let mut worst: Option<Defect> = None;
    for (k, (&c, &e)) in est.jet.c.iter().zip(&est.err).enumerate() {
        if !c.is_finite() {
            return Err(Error::Evaluation(num_complex::Complex64::new(x, 0.0)));
        }
        let signed = if k % 2 == 0 { c } else { -c };
        let scaled = signed / scale;
        if scaled < -tol && worst.is_none_or(|w| scaled < w.scaled) {
            let d = est.jet.derivative_value(k);
            worst = Some(Defect {
                x,
                order: k,
                scaled,
                derivative: if k % 2 == 0 { d } else { -d },
                within_error: scaled + e / scale >= -tol,
            });
        }
    }
    Ok(worst)
}

/// Sign scan of (−1)^n (x^α f)^{(n)} for n = 0..=max_order at the grid points.
pub fn check_cm(f: &Func, alpha: f64, grid: &Grid, max_order: usize, tol: f64) -> Result<ClassReport> {
    let label = if alpha == 0.0 { ClassLabel::Cm } else { ClassLabel::CmOrder(alpha) };
    if max_order > f.max_order() {
        return Err(Error::OrderOverflow { order: max_order, max: f.max_order() });
    }
    let g = f.times_power(alpha);
    let defects = grid
        .points()
        .into_par_iter()
        .map(|x| scan_point(&g, x, max_order, tol))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ClassReport::new(f.name(), label, grid.to_string(), max_order, tol);
    let refuting = defects.iter().flatten().filter(|d| !d.within_error).min_by(|a, b| a.scaled.total_cmp(&b.scaled));
    if let Some(d) = refuting {
        return Ok(report.refute(Witness::real(d.x, d.order, d.derivative)));
    }
    if let Some(d) = defects.iter().flatten().next() {
        report.verdict = Verdict::Inconclusive;
        report = report.note(format!("sign violation at x = {} (order {}) is within the derivative error bound", d.x, d.order));
    }
    if !f.has_analytic_jet() {
        report = report.note("finite-difference derivatives");
    }
    Ok(report)
}

fn require_positive(f: &Func, grid: &Grid) -> Result<()> {
    for x in grid.points() {
        if !(f.eval(x)? > 0.0) {
            return Err(Error::NonPositive(x));
        }
    }
    Ok(())
}

/// −f′/f CM, with Horn's f^{1/n} CM (n = 1, 2, 3) as a cross-check.
pub fn check_lcm(f: &Func, grid: &Grid, max_order: usize, tol: f64) -> Result<ClassReport> {
    require_positive(f, grid)?;
    let inner_order = max_order.min(f.max_order().saturating_sub(1));
    let mut report = check_cm(&f.neg_log_derivative(), 0.0, grid, inner_order, tol)?;
    report.function = f.name().to_string();
    report.class_label = ClassLabel::Lcm;
    let horn_order = max_order.min(f.max_order());
    for n in 1..=3 {
        let root = check_cm(&f.powf(1.0 / n as f64), 0.0, grid, horn_order, tol)?;
        if report.is_verified() && root.is_refuted() {
            report.verdict = Verdict::Inconclusive;
            report = report.note(format!("Horn cross-check: f^(1/{n}) refuted although -f'/f passed"));
        }
    }
    Ok(report)
}

/// c_k(f)(x) = x^{1−λ} (x^{λ−1+k} f(x))^{(k)}.
pub fn widder_operator(f: &Func, lambda: f64, k: usize) -> Func {
    let mut g = f.times_power(lambda - 1.0 + k as f64);
    for _ in 0..k {
        g = g.derivative();
    }
    g.times_power(1.0 - lambda).renamed(format!("c_{k}[{}]", f.name()))
}

/// Generalized Stieltjes test of order λ: c_k(f) CM for k = 0..=k_max, each scanned to `cm_orders`.
/// For λ = 1 and a complex extension, also samples Im f ≤ 0 on the upper half-plane.
pub fn check_stieltjes_order(
    f: &Func,
    lambda: f64,
    k_max: usize,
    grid: &Grid,
    cm_orders: usize,
    tol: f64,
) -> Result<ClassReport> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("Stieltjes order must be positive, got {lambda}")));
    }
    let mut report = ClassReport::new(f.name(), ClassLabel::Stieltjes(lambda), grid.to_string(), 0, tol);
    for k in 0..=k_max {
        let orders = cm_orders.min(f.max_order().saturating_sub(k));
        let ck = check_cm(&widder_operator(f, lambda, k), 0.0, grid, orders, tol)?;
        report = report.absorb(&ck);
        if report.is_refuted() {
            return Ok(report.note(format!("c_{k} is not CM")));
        }
    }
    report.orders_checked = k_max;
    if lambda == 1.0 && f.has_complex() {
        let g = f.clone();
        let neg = move |z| g.complex(z).expect("complex extension present").map(|v| -v);
        match verify_pick(f.name(), &neg, &HalfPlaneGrid::coarse(40), 1e-9) {
            Ok(pick) if pick.is_refuted() => {
                report = report.note("half-plane test: Im f > 0 somewhere in the upper half-plane");
                report = report.absorb(&pick);
            }
            Ok(_) => report = report.note("half-plane test passed"),
            Err(e) => report = report.note(format!("half-plane test skipped: {e}")),
        }
    }
    Ok(report)
}

/// g ∈ B_λ: x^{1−λ} g′ CM, plus the companion scan of g/x^λ.
pub fn check_bernstein_order(g: &Func, lambda: f64, grid: &Grid, max_order: usize, tol: f64) -> Result<ClassReport> {
    for x in grid.points() {
        if g.eval(x)? < -tol {
            return Err(Error::NonPositive(x));
        }
    }
    let inner_order = max_order.min(g.max_order().saturating_sub(1));
    let mut report = check_cm(&g.derivative().times_power(1.0 - lambda), 0.0, grid, inner_order, tol)?;
    report.function = g.name().to_string();
    report.class_label = ClassLabel::Bernstein(lambda);
    if report.is_verified() {
        let companion = check_cm(g, -lambda, grid, max_order.min(g.max_order()), tol)?;
        if companion.is_refuted() {
            report.verdict = Verdict::Inconclusive;
            report = report.note("g/x^λ refuted although x^(1-λ)g' passed");
        }
    }
    Ok(report)
}

/// f ∈ T_{λ,α}: x^{1−λ} f′ ∈ S_{λ+1−α}.
pub fn thorin_check(
    f: &Func,
    lambda: f64,
    alpha: f64,
    grid: &Grid,
    k_max: usize,
    cm_orders: usize,
    tol: f64,
) -> Result<ClassReport> {
    if !(lambda > 0.0 && alpha < lambda + 1.0) {
        return Err(Error::Domain(format!("Thorin class needs λ > 0 and α < λ + 1 (λ={lambda}, α={alpha})")));
    }
    let g = f.derivative().times_power(1.0 - lambda);
    let orders = cm_orders.min(f.max_order().saturating_sub(k_max + 1));
    let mut report = check_stieltjes_order(&g, lambda + 1.0 - alpha, k_max, grid, orders, tol)?;
    report.function = f.name().to_string();
    report.class_label = ClassLabel::Thorin { lambda, alpha };
    Ok(report)
}

/// e^{−x g} CM for each x in `x_list`.
pub fn exp_bernstein_check(g: &Func, x_list: &[f64], grid: &Grid, max_order: usize, tol: f64) -> Result<ClassReport> {
    let mut report = ClassReport::new(g.name(), ClassLabel::Other("exp-Bernstein".into()), grid.to_string(), max_order, tol);
    for &x in x_list {
        let r = check_cm(&g.exp_neg_scaled(x), 0.0, grid, max_order, tol)?;
        if r.is_refuted() {
            report = report.note(format!("e^(-{x} g) is not CM"));
        }
        report = report.absorb(&r);
    }
    Ok(report)
}

/// f_n(t) = (−1)^n f^{(n)}(n/t)/n! · (n/t)^{n+1}.
pub fn post_widder_density(f: &Func, t: f64, n: usize) -> Result<f64> {
    if !(t > 0.0) || n == 0 {
        return Err(Error::Domain(format!("Post-Widder needs t > 0 and n ≥ 1 (t={t}, n={n})")));
    }
    if n > f.max_order() {
        return Err(Error::OrderOverflow { order: n, max: f.max_order() });
    }
    let x = n as f64 / t;
    let c = f.jet(x, n)?.c[n];
    Ok(if n.is_multiple_of(2) { c } else { -c } * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::func::{builtin, Jet};

    fn grid() -> Grid {
        Grid::log(0.1, 20.0, 25)
    }

    #[test]
    fn cm_examples() {
        assert!(check_cm(&builtin("exp_neg").unwrap(), 0.0, &grid(), 8, DEFAULT_CM_TOL).unwrap().is_verified());
        let r = check_cm(&builtin("identity").unwrap(), 0.0, &grid(), 8, DEFAULT_CM_TOL).unwrap();
        assert!(r.is_refuted());
        assert_eq!(r.witness.unwrap().order, 1);
        let rem = builtin("remainder_r2:2").unwrap();
        assert!(check_cm(&rem, 1.0, &Grid::log(0.5, 5.0, 6), 4, DEFAULT_CM_TOL).unwrap().is_verified());
    }

    #[test]
    fn numeric_chain_is_flagged() {
        let f = Func::new("e", |x: f64| Ok((-x).exp()));
        let r = check_cm(&f, 0.0, &Grid::log(0.5, 5.0, 5), 6, DEFAULT_CM_TOL).unwrap();
        assert!(r.is_verified());
        assert!(r.notes.iter().any(|n| n.contains("finite")));
        assert!(check_cm(&f, 0.0, &grid(), 9, DEFAULT_CM_TOL).is_err());
    }

    #[test]
    fn lcm_examples() {
        assert!(check_lcm(&builtin("exp_neg").unwrap(), &grid(), 8, DEFAULT_CM_TOL).unwrap().is_verified());
        assert!(check_lcm(&builtin("inv").unwrap(), &grid(), 8, DEFAULT_CM_TOL).unwrap().is_verified());
        let f = builtin("inv_pow_plus_one:3").unwrap();
        assert!(check_cm(&f, 0.0, &grid(), 8, DEFAULT_CM_TOL).unwrap().is_verified());
        assert!(check_lcm(&f, &grid(), 8, DEFAULT_CM_TOL).unwrap().is_refuted());
        let neg = Func::from_jet("neg", |x, n| Ok(Jet::constant(x, -1.0, n)));
        assert!(matches!(check_lcm(&neg, &grid(), 4, DEFAULT_CM_TOL), Err(Error::NonPositive(_))));
    }

    #[test]
    fn stieltjes_examples() {
        let s = |id: &str| check_stieltjes_order(&builtin(id).unwrap(), 1.0, 4, &grid(), 8, DEFAULT_CM_TOL).unwrap();
        assert!(s("inv").is_verified());
        assert!(s("log1p_inv").is_verified());
        assert!(s("exp_neg").is_refuted());
    }

    #[test]
    fn bernstein_examples() {
        let b = |id: &str, l| check_bernstein_order(&builtin(id).unwrap(), l, &grid(), 8, DEFAULT_CM_TOL).unwrap();
        assert!(b("incomplete_gamma:2", 2.0).is_verified());
        assert!(b("identity", 1.0).is_verified());
        assert!(b("lerch_scaled:0.5", 0.5).is_verified());
        assert!(b("square", 1.0).is_refuted());
    }

    #[test]
    fn thorin_examples() {
        let g = Grid::log(0.2, 10.0, 12);
        let t = |id: &str, l, a| thorin_check(&builtin(id).unwrap(), l, a, &g, 3, 6, DEFAULT_CM_TOL).unwrap();
        assert!(t("hyp2f1:1:1", 1.0, 1.0).is_verified());
        assert!(t("identity", 1.0, 0.0).is_verified());
        assert!(t("incomplete_gamma:1", 1.0, 1.0).is_refuted());
    }

    #[test]
    fn exp_bernstein_examples() {
        let g = grid();
        assert!(exp_bernstein_check(&builtin("identity").unwrap(), &[1.0], &g, 8, DEFAULT_CM_TOL).unwrap().is_verified());
        let one_minus = builtin("exp_neg").unwrap().scale(-1.0).add_constant(1.0);
        assert!(exp_bernstein_check(&one_minus, &[2.0], &g, 8, DEFAULT_CM_TOL).unwrap().is_verified());
        assert!(exp_bernstein_check(&builtin("square").unwrap(), &[1.0], &g, 8, DEFAULT_CM_TOL).unwrap().is_refuted());
    }

    #[test]
    fn post_widder_values() {
        let f = builtin("inv_one_plus").unwrap();
        for n in [1usize, 5, 40] {
            let expect = (n as f64 / (n as f64 + 1.0)).powi(n as i32 + 1);
            assert!((post_widder_density(&f, 1.0, n).unwrap() - expect).abs() < 1e-14 * expect);
        }
        let inv = builtin("inv").unwrap();
        assert!((post_widder_density(&inv, 2.5, 7).unwrap() - 1.0).abs() < 1e-13);
        let e = builtin("exp_neg").unwrap();
        assert!(post_widder_density(&e, 1.0, 64).unwrap() > post_widder_density(&e, 1.0, 8).unwrap());
    }
}
