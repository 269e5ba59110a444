//! Consistency of verdicts across nested classes on the built-in registry.

use rayon::prelude::*;
use serde::Serialize;

use super::cm::{check_bernstein_order, check_cm, check_lcm, check_stieltjes_order, DEFAULT_CM_TOL};
use crate::error::Result;
use crate::func::{builtin, registry, Func};
use crate::numerics::Grid;
use crate::report::{ClassLabel, ClassReport, Verdict};

/// Verdicts of one function across the classes compared by the suite.
#[derive(Debug, Clone, Serialize)]
pub struct InclusionRow {
    pub function: String,
    pub cm: Verdict,
    pub lcm: Verdict,
    pub stieltjes_1: Verdict,
    pub stieltjes_2: Verdict,
    pub bernstein_1: Verdict,
    pub bernstein_2: Verdict,
}

/// An antecedent verified while the consequent is refuted.
#[derive(Debug, Clone, Serialize)]
pub struct Inconsistency {
    pub function: String,
    pub antecedent: String,
    pub consequent: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InclusionReport {
    pub rows: Vec<InclusionRow>,
    pub inconsistencies: Vec<Inconsistency>,
}

#[derive(Debug, Clone, Copy)]
pub struct InclusionConfig {
    pub grid: Grid,
    pub cm_orders: usize,
    pub k_max: usize,
    pub tol: f64,
}

impl Default for InclusionConfig {
    fn default() -> Self {
        Self { grid: Grid::log(0.1, 20.0, 15), cm_orders: 8, k_max: 3, tol: DEFAULT_CM_TOL }
    }
}

fn verdict(r: Result<ClassReport>) -> Verdict {
    r.map(|r| r.verdict).unwrap_or(Verdict::Inconclusive)
}

pub fn inclusion_row(f: &Func, cfg: &InclusionConfig) -> InclusionRow {
    let (g, o, t) = (&cfg.grid, cfg.cm_orders, cfg.tol);
    InclusionRow {
        function: f.name().to_string(),
        cm: verdict(check_cm(f, 0.0, g, o, t)),
        lcm: verdict(check_lcm(f, g, o, t)),
        stieltjes_1: verdict(check_stieltjes_order(f, 1.0, cfg.k_max, g, o, t)),
        stieltjes_2: verdict(check_stieltjes_order(f, 2.0, cfg.k_max, g, o, t)),
        bernstein_1: verdict(check_bernstein_order(f, 1.0, g, o, t)),
        bernstein_2: verdict(check_bernstein_order(f, 2.0, g, o, t)),
    }
}

fn inconsistencies(row: &InclusionRow) -> Vec<Inconsistency> {
    let pairs = [
        ("S_1", row.stieltjes_1, "CM", row.cm),
        ("S_2", row.stieltjes_2, "CM", row.cm),
        ("LCM", row.lcm, "CM", row.cm),
        ("S_1", row.stieltjes_1, "S_2", row.stieltjes_2),
        ("B_1", row.bernstein_1, "B_2", row.bernstein_2),
    ];
    pairs
        .iter()
        .filter(|(_, a, _, c)| *a == Verdict::Verified && *c == Verdict::Refuted)
        .map(|(a, _, c, _)| Inconsistency { function: row.function.clone(), antecedent: a.to_string(), consequent: c.to_string() })
        .collect()
}

/// Runs the class-inclusion suite over `functions`.
pub fn inclusion_suite(functions: &[Func], cfg: &InclusionConfig) -> InclusionReport {
    let rows: Vec<InclusionRow> = functions.par_iter().map(|f| inclusion_row(f, cfg)).collect();
    let inconsistencies = rows.iter().flat_map(inconsistencies).collect();
    InclusionReport { rows, inconsistencies }
}

/// The suite over the full built-in registry.
pub fn registry_inclusion_suite(cfg: &InclusionConfig) -> InclusionReport {
    inclusion_suite(&registry(), cfg)
}

/// Products of pairs from {e^{−x}, 1/x, 1/(1+x)} scanned for complete monotonicity.
pub fn product_closure_check(grid: &Grid, max_order: usize, tol: f64) -> Result<ClassReport> {
    let base = ["exp_neg", "inv", "inv_one_plus"].map(|id| builtin(id).expect("registry id"));
    let mut report = ClassReport::new("products", ClassLabel::Cm, grid.to_string(), max_order, tol);
    for i in 0..base.len() {
        for j in i..base.len() {
            let p = base[i].mul(&base[j]);
            let r = check_cm(&p, 0.0, grid, max_order, tol)?;
            if r.is_refuted() {
                report = report.note(format!("{} is not CM", p.name()));
            }
            report = report.absorb(&r);
        }
    }
    Ok(report)
}

/// log(Γ(x)Γ(x+a+b)/(Γ(x+a)Γ(x+b))) in S_2 and LCM.
pub fn kristiansen_check(a: f64, b: f64, grid: &Grid, k_max: usize, cm_orders: usize, tol: f64) -> Result<ClassReport> {
    let f = builtin(&format!("gamma_ratio:{a}:{b}"))?;
    let s2 = check_stieltjes_order(&f, 2.0, k_max, grid, cm_orders, tol)?;
    let lcm = check_lcm(&f, grid, cm_orders, tol)?;
    let mut report = s2.clone().absorb(&lcm);
    report.class_label = ClassLabel::Other("S_2 and LCM".into());
    if s2.is_verified() && lcm.is_refuted() {
        report = report.note("S_2 verified but LCM refuted");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inconsistent_pairs_are_detected() {
        let row = InclusionRow {
            function: "f".into(),
            cm: Verdict::Refuted,
            lcm: Verdict::Verified,
            stieltjes_1: Verdict::Inconclusive,
            stieltjes_2: Verdict::Verified,
            bernstein_1: Verdict::Refuted,
            bernstein_2: Verdict::Verified,
        };
        let bad = inconsistencies(&row);
        assert_eq!(bad.len(), 2);
        assert!(bad.iter().all(|i| i.consequent == "CM"));
    }

    #[test]
    fn small_suite_is_consistent() {
        let fs: Vec<Func> = ["exp_neg", "inv", "log1p_inv", "identity", "inv_pow_plus_one:3"]
            .iter()
            .map(|id| builtin(id).unwrap())
            .collect();
        let r = inclusion_suite(&fs, &InclusionConfig::default());
        assert!(r.inconsistencies.is_empty(), "{:?}", r.inconsistencies);
        assert_eq!(r.rows[1].stieltjes_1, Verdict::Verified);
        assert_eq!(r.rows[3].bernstein_1, Verdict::Verified);
        assert_eq!(r.rows[4].lcm, Verdict::Refuted);
    }

    #[test]
    fn products_and_kristiansen() {
        let g = Grid::log(0.1, 20.0, 12);
        assert!(product_closure_check(&g, 8, DEFAULT_CM_TOL).unwrap().is_verified());
        assert!(kristiansen_check(1.0, 1.0, &g, 3, 6, DEFAULT_CM_TOL).unwrap().is_verified());
        assert!(kristiansen_check(0.5, 2.0, &g, 3, 6, DEFAULT_CM_TOL).unwrap().is_verified());
    }
}
