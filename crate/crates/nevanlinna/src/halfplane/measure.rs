use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{integrate, integrate_complex, Estimate, QuadratureConfig};

pub type Density = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A density on (lo, hi); either end may be infinite.
#[derive(Clone)]
pub struct DensityPiece {
    pub lo: f64,
    pub hi: f64,
    pub density: Density,
    pub singular_lo: bool,
    pub singular_hi: bool,
    /// Interior points where the density is singular or non-smooth.
    pub breakpoints: Vec<f64>,
}

impl fmt::Debug for DensityPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DensityPiece")
            .field("lo", &self.lo)
            .field("hi", &self.hi)
            .field("singular_lo", &self.singular_lo)
            .field("singular_hi", &self.singular_hi)
            .field("breakpoints", &self.breakpoints)
            .finish_non_exhaustive()
    }
}

impl DensityPiece {
    pub fn new(lo: f64, hi: f64, density: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { lo, hi, density: Arc::new(density), singular_lo: false, singular_hi: false, breakpoints: Vec::new() }
    }

    pub fn singular(mut self, lo: bool, hi: bool) -> Self {
        self.singular_lo = lo;
        self.singular_hi = hi;
        self
    }

    pub fn with_breakpoints(mut self, points: Vec<f64>) -> Self {
        self.breakpoints = points;
        self
    }

    fn cuts(&self) -> Vec<f64> {
        let mut cuts: Vec<f64> = self.breakpoints.iter().copied().filter(|p| *p > self.lo && *p < self.hi).collect();
        let needs_split = (self.singular_lo && self.lo.is_finite()) || (self.singular_hi && self.hi.is_finite());
        if cuts.is_empty() && needs_split {
            // a singular end is handled by the tanh-sinh rule, which is applied next to breakpoints
            cuts.push(match (self.lo.is_finite(), self.hi.is_finite()) {
                (true, true) => 0.5 * (self.lo + self.hi),
                (true, false) => self.lo + 1.0,
                (false, true) => self.hi - 1.0,
                (false, false) => 0.0,
            });
        }
        cuts
    }
}

/// Positive measure: point masses plus piecewise densities.
#[derive(Debug, Clone, Default)]
pub struct MeasureSpec {
    pub point_masses: Vec<(f64, f64)>,
    pub density_pieces: Vec<DensityPiece>,
}

impl MeasureSpec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point_mass(location: f64, weight: f64) -> Result<Self> {
        Self::zero().with_point_mass(location, weight)
    }

    pub fn density(piece: DensityPiece) -> Result<Self> {
        Self::zero().with_density(piece)
    }

    pub fn with_point_mass(mut self, location: f64, weight: f64) -> Result<Self> {
        if !(weight >= 0.0) || !location.is_finite() {
            return Err(Error::Domain(format!("point mass needs weight ≥ 0 at a finite location ({location}, {weight})")));
        }
        self.point_masses.push((location, weight));
        Ok(self)
    }

    pub fn with_density(mut self, piece: DensityPiece) -> Result<Self> {
        if !(piece.lo < piece.hi) {
            return Err(Error::Domain(format!("empty density interval ({}, {})", piece.lo, piece.hi)));
        }
        if self.density_pieces.iter().any(|p| piece.lo < p.hi && p.lo < piece.hi) {
            return Err(Error::Domain(format!("density interval ({}, {}) overlaps another piece", piece.lo, piece.hi)));
        }
        self.density_pieces.push(piece);
        Ok(self)
    }

    /// Checks the densities for negative values at `per_piece` interior samples.
    pub fn check_nonnegative(&self, per_piece: usize, tol: f64) -> Result<()> {
        for p in &self.density_pieces {
            let lo = if p.lo.is_finite() { p.lo } else { p.hi.min(0.0) - 1e3 };
            let hi = if p.hi.is_finite() { p.hi } else { p.lo.max(0.0) + 1e3 };
            for i in 1..=per_piece {
                let t = lo + (hi - lo) * i as f64 / (per_piece + 1) as f64;
                let v = (p.density)(t);
                if v < -tol {
                    return Err(Error::Domain(format!("density is {v} < 0 at {t}")));
                }
            }
        }
        Ok(())
    }

    /// ∫ k(t) dμ(t).
    pub fn integrate(&self, kernel: impl Fn(f64) -> f64 + Sync, config: &QuadratureConfig) -> Result<Estimate> {
        let mut value: f64 = self.point_masses.iter().map(|(t, w)| w * kernel(*t)).sum();
        let mut error = 0.0;
        for p in &self.density_pieces {
            let cfg = config.clone().breakpoints(p.cuts());
            let e = integrate(|t| (p.density)(t) * kernel(t), p.lo, p.hi, &cfg)?;
            value += e.value;
            error += e.error;
        }
        Ok(Estimate { value, error })
    }

    pub fn integrate_complex(
        &self,
        kernel: impl Fn(f64) -> Complex64 + Sync,
        config: &QuadratureConfig,
    ) -> Result<Estimate<Complex64>> {
        let mut value: Complex64 = self.point_masses.iter().map(|(t, w)| kernel(*t) * *w).sum();
        let mut error = 0.0;
        for p in &self.density_pieces {
            let cfg = config.clone().breakpoints(p.cuts());
            let e = integrate_complex(|t| kernel(t) * (p.density)(t), p.lo, p.hi, &cfg)?;
            value += e.value;
            error += e.error;
        }
        Ok(Estimate { value, error })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(MeasureSpec::point_mass(0.0, -1.0).is_err());
        let m = MeasureSpec::density(DensityPiece::new(0.0, 2.0, |_| 1.0)).unwrap();
        assert!(m.with_density(DensityPiece::new(1.0, 3.0, |_| 1.0)).is_err());
        let neg = MeasureSpec::density(DensityPiece::new(0.0, 1.0, |t| t - 0.5)).unwrap();
        assert!(neg.check_nonnegative(10, 0.0).is_err());
    }

    #[test]
    fn singular_endpoint_density() {
        // ∫_0^1 t^{-1/2} dt = 2
        let m = MeasureSpec::density(DensityPiece::new(0.0, 1.0, |t| t.powf(-0.5)).singular(true, false)).unwrap();
        let e = m.integrate(|_| 1.0, &QuadratureConfig::default()).unwrap();
        assert!((e.value - 2.0).abs() < 1e-9);
    }
}
