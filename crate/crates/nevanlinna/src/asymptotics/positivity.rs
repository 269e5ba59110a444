use super::expansion::{RemainderConfig, TruncationError};
use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::report::{ClassLabel, ClassReport, Witness};

/// Relative tolerance on s·(f − T)/scale, where scale bounds the rounding error.
pub const SIGN_TOL: f64 = 1e-13;

fn scan(te: &TruncationError, sign: f64, grid: &Grid, label: String) -> ClassReport {
    let mut report = ClassReport::new(label, ClassLabel::Positivity, grid.to_string(), te.m, SIGN_TOL);
    let mut worst: Option<(f64, f64)> = None;
    for t in grid.points() {
        let v = sign * te.value(t);
        let scale = te.scale(t).max(f64::MIN_POSITIVE);
        let normalized = v / scale;
        if worst.is_none_or(|(_, w)| normalized < w) {
            worst = Some((t, normalized));
        }
    }
    if let Some((t, w)) = worst {
        if w < -SIGN_TOL {
            report = report.refute(Witness::real(t, te.m, w));
        } else {
            report = report.note(format!("min normalized value {w:.3e} at t = {t:.4e}"));
        }
    }
    report
}

/// Sign scan of the even-order remainder integrand.
///
/// N = 2 checks (−1)^{m−1}(f − T_{2m}) ≥ 0; N = 3 checks (−1)^m (f − T_{2m}) ≥ 0.
pub fn integrand_positivity_scan(n: usize, m: usize, grid: &Grid) -> Result<ClassReport> {
    let sign = match n {
        2 => if m % 2 == 1 { 1.0 } else { -1.0 },
        3 => if m.is_multiple_of(2) { 1.0 } else { -1.0 },
        _ => return Err(Error::Domain(format!("positivity scan covers N = 2, 3, got {n}"))),
    };
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let te = TruncationError::new(n, 2 * m, &RemainderConfig::default())?;
    Ok(scan(&te, sign, grid, format!("(f - T_{})[N={n}]", 2 * m)))
}

/// Whether f − T_order keeps one sign on the grid; a sign change is reported as a refutation.
pub fn truncation_sign_scan(n: usize, order: usize, grid: &Grid) -> Result<ClassReport> {
    let te = TruncationError::new(n, order, &RemainderConfig::default())?;
    let points = grid.points();
    let first = points
        .iter()
        .map(|&t| te.value(t))
        .find(|v| *v != 0.0)
        .unwrap_or(0.0);
    let sign = if first < 0.0 { -1.0 } else { 1.0 };
    Ok(scan(&te, sign, grid, format!("(f - T_{order})[N={n}]")))
}

/// N = 3 default grid: 4000 log-spaced points on [1e-4, 100].
pub fn default_n3_grid() -> Grid {
    Grid::log(1e-4, 1e2, 4000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_even_is_positive() {
        let g = Grid::log(1e-3, 50.0, 2000);
        assert!(integrand_positivity_scan(2, 2, &g).unwrap().is_verified());
        assert!(integrand_positivity_scan(2, 1, &g).unwrap().is_verified());
    }

    #[test]
    fn n2_odd_changes_sign() {
        let g = Grid::log(1e-3, 50.0, 2000);
        let r = truncation_sign_scan(2, 3, &g).unwrap();
        assert!(r.is_refuted());
        assert!(r.witness.unwrap().x > 1.0);
    }

    #[test]
    fn n3_positive_for_m6() {
        assert!(integrand_positivity_scan(3, 6, &default_n3_grid()).unwrap().is_verified());
    }
}
