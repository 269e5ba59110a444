use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::ln_gamma;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct UnitBallRow {
    pub n: usize,
    pub log_volume: f64,
    /// Ω_n^{1/(n log n)}; undefined for n = 1.
    pub root: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitBallTable {
    pub rows: Vec<UnitBallRow>,
    /// Ω_n^{1/(n log n)} strictly decreasing for n ≥ 2.
    pub decreasing: bool,
    /// (log r_n) convex in n for n ≥ 2.
    pub log_convex: bool,
    /// |r_n − e^{−1/2}| strictly decreasing.
    pub approaches_limit: bool,
    /// |r_n − √e| strictly decreasing.
    pub approaches_sqrt_e: bool,
}

/// log Ω_n = (n/2) log π − log Γ(n/2 + 1).
pub fn log_unit_ball_volume(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    h * PI.ln() - ln_gamma(h + 1.0)
}

/// log Ω_n^{1/(n log n)} = log π/(2 log n) − log Γ(n/2+1)/(n log n).
pub fn log_unit_ball_root(n: usize) -> f64 {
    let nf = n as f64;
    PI.ln() / (2.0 * nf.ln()) - ln_gamma(nf / 2.0 + 1.0) / (nf * nf.ln())
}

fn strictly_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] < w[0])
}

pub fn unit_ball_sequence(n_max: usize) -> Result<UnitBallTable> {
    if n_max < 3 {
        return Err(Error::Domain(format!("n_max must be at least 3, got {n_max}")));
    }
    let rows: Vec<UnitBallRow> = (1..=n_max)
        .map(|n| UnitBallRow {
            n,
            log_volume: log_unit_ball_volume(n),
            root: (n >= 2).then(|| log_unit_ball_root(n).exp()),
        })
        .collect();
    let logs: Vec<f64> = (2..=n_max).map(log_unit_ball_root).collect();
    let roots: Vec<f64> = logs.iter().map(|l| l.exp()).collect();
    let log_convex = logs.windows(3).all(|w| w[0] + w[2] - 2.0 * w[1] >= 0.0);
    let dist = |target: f64| roots.iter().map(|r| (r - target).abs()).collect::<Vec<_>>();
    Ok(UnitBallTable {
        rows,
        decreasing: strictly_decreasing(&roots),
        log_convex,
        approaches_limit: strictly_decreasing(&dist((-0.5f64).exp())),
        approaches_sqrt_e: strictly_decreasing(&dist(0.5f64.exp())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_volumes() {
        assert!((log_unit_ball_volume(2).exp() - PI).abs() < 1e-13 * PI);
        assert!((log_unit_ball_volume(3).exp() - 4.0 * PI / 3.0).abs() < 1e-13 * PI);
        for n in 3..60 {
            let rec = log_unit_ball_volume(n - 2) + (2.0 * PI / n as f64).ln();
            assert!((log_unit_ball_volume(n) - rec).abs() < 1e-12 * rec.abs().max(1.0));
        }
    }

    #[test]
    fn root_sequence() {
        let t = unit_ball_sequence(60).unwrap();
        assert!(t.decreasing && t.log_convex && t.approaches_limit);
        assert!(!t.approaches_sqrt_e);
        let big = unit_ball_sequence(300).unwrap();
        let last = big.rows.last().unwrap().root.unwrap();
        assert!(last.is_finite() && last > (-0.5f64).exp());
        assert!(unit_ball_sequence(2).is_err());
    }
}
