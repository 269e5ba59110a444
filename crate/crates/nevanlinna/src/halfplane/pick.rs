use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use super::measure::{DensityPiece, MeasureSpec};
use crate::error::{Error, Result};
use crate::numerics::{extrapolate_limit, Estimate, QuadratureConfig};
use crate::report::{ClassLabel, ClassReport, Witness};

/// A complex map that may fail at some points.
pub type ComplexMap = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// Polar sampling of the upper half-plane: log-spaced moduli × linear angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlaneGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub n_r: usize,
    pub theta_min: f64,
    pub theta_max: f64,
    pub n_theta: usize,
}

impl Default for HalfPlaneGrid {
    fn default() -> Self {
        Self { r_min: 1e-3, r_max: 1e3, n_r: 100, theta_min: 0.01, theta_max: PI - 0.01, n_theta: 100 }
    }
}

impl fmt::Display for HalfPlaneGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={}:{}:{}:log,theta={}:{}:{}:lin",
            self.r_min, self.r_max, self.n_r, self.theta_min, self.theta_max, self.n_theta
        )
    }
}

impl HalfPlaneGrid {
    pub fn coarse(n: usize) -> Self {
        Self { n_r: n, n_theta: n, ..Self::default() }
    }

    pub fn points(&self) -> Vec<Complex64> {
        let step = |lo: f64, hi: f64, n: usize, i: usize| if n == 1 { lo } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 };
        let (lr0, lr1) = (self.r_min.ln(), self.r_max.ln());
        let mut out = Vec::with_capacity(self.n_r * self.n_theta);
        for i in 0..self.n_r {
            let r = step(lr0, lr1, self.n_r, i).exp();
            for j in 0..self.n_theta {
                out.push(Complex64::from_polar(r, step(self.theta_min, self.theta_max, self.n_theta, j)));
            }
        }
        out
    }
}

fn checked(f: &(dyn Fn(Complex64) -> Result<Complex64> + Sync), z: Complex64) -> Result<Complex64> {
    match f(z) {
        Ok(v) if v.re.is_finite() && v.im.is_finite() => Ok(v),
        _ => Err(Error::Evaluation(z)),
    }
}

/// Samples Im f on the grid; refutes with the point of smallest Im f if it drops below −tol.
pub fn verify_pick(
    name: &str,
    f: &(dyn Fn(Complex64) -> Result<Complex64> + Sync),
    grid: &HalfPlaneGrid,
    tol: f64,
) -> Result<ClassReport> {
    let values = grid
        .points()
        .into_par_iter()
        .map(|z| checked(f, z).map(|v| (z, v.im)))
        .collect::<Result<Vec<_>>>()?;
    let (z, worst) = values.into_iter().fold((Complex64::new(0.0, 0.0), f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
    let report = ClassReport::new(name, ClassLabel::Pick, grid.to_string(), 0, tol);
    Ok(if worst < -tol {
        report.refute(Witness { x: z.re, y: z.im, order: 0, value: worst })
    } else {
        report.note(format!("min Im f = {worst:.3e}"))
    })
}

/// Default y-ladder for boundary values.
pub const BOUNDARY_LADDER: [f64; 4] = [1e-1, 5e-2, 2.5e-2, 1.25e-2];

/// Ladder shrunk so that its largest step is at most an eighth of the distance to the nearest singular point.
pub fn scaled_ladder(x: f64, singular_points: &[f64]) -> Result<Vec<f64>> {
    let dist = singular_points.iter().map(|p| (x - p).abs()).fold(f64::INFINITY, f64::min);
    if dist == 0.0 {
        return Err(Error::SingularPoint(x));
    }
    let scale = (dist / (8.0 * BOUNDARY_LADDER[0])).min(1.0);
    Ok(BOUNDARY_LADDER.iter().map(|y| y * scale).collect())
}

/// (1/π) lim_{y→0+} Im f(x + iy), extrapolated along `ladder`.
pub fn boundary_density(
    f: &(dyn Fn(Complex64) -> Result<Complex64> + Sync),
    x: f64,
    ladder: &[f64],
) -> Result<Estimate> {
    let samples = ladder
        .iter()
        .map(|&y| checked(f, Complex64::new(x, y)).map(|v| (y, v.im / PI)))
        .collect::<Result<Vec<_>>>()?;
    extrapolate_limit(&samples)
}

/// (a, b, μ) with f(z) = az + b + ∫ (1/(t−z) − t/(t²+1)) dμ(t).
#[derive(Debug, Clone)]
pub struct PickTriple {
    pub a: f64,
    pub b: f64,
    pub measure: MeasureSpec,
}

impl PickTriple {
    pub fn new(a: f64, b: f64, measure: MeasureSpec) -> Result<Self> {
        if !(a >= 0.0) {
            return Err(Error::Domain(format!("Pick triple needs a ≥ 0, got {a}")));
        }
        Ok(Self { a, b, measure })
    }

    /// ∫ dμ/(t²+1), which must be finite.
    pub fn poisson_mass(&self) -> Result<f64> {
        Ok(self.measure.integrate(|t| 1.0 / (t * t + 1.0), &QuadratureConfig::with_tolerances(1e-10, 1e-8))?.value)
    }
}

/// Settings for [`extract_pick_triple`].
#[derive(Debug, Clone, PartialEq)]
pub struct PickExtraction {
    pub y_max: f64,
    /// Multipliers of `y_max` at which f(iy)/(iy) is sampled.
    pub y_ladder: Vec<f64>,
    /// Points of ℝ where the boundary density may be singular; the ladder is shrunk near them.
    pub singular_points: Vec<f64>,
}

impl Default for PickExtraction {
    fn default() -> Self {
        Self { y_max: 1e3, y_ladder: vec![1.0, 2.0, 4.0, 8.0], singular_points: vec![0.0] }
    }
}

/// Recovers (a, b, density) of a Pick function; the measure is returned as a sampled density.
pub fn extract_pick_triple(f: ComplexMap, cfg: &PickExtraction) -> Result<PickTriple> {
    let samples = cfg
        .y_ladder
        .iter()
        .map(|&m| {
            let y = cfg.y_max * m;
            checked(&*f, Complex64::new(0.0, y)).map(|v| (1.0 / y, (v / Complex64::new(0.0, y)).re))
        })
        .collect::<Result<Vec<_>>>()?;
    let a = extrapolate_limit(&samples)?;
    if a.error > 1e-6 * (1.0 + a.value.abs()) {
        return Err(Error::Extrapolation(format!("a = {} with error {}", a.value, a.error)));
    }
    let a = if a.value.abs() < 1e-9 { 0.0 } else { a.value };
    let b = checked(&*f, Complex64::new(0.0, 1.0))?.re;
    let singular = cfg.singular_points.clone();
    let g = f.clone();
    let density = move |t: f64| {
        scaled_ladder(t, &singular).and_then(|l| boundary_density(&*g, t, &l)).map(|e| e.value).unwrap_or(f64::NAN)
    };
    let mut breaks = cfg.singular_points.clone();
    breaks.sort_by(f64::total_cmp);
    if breaks.is_empty() {
        breaks.push(0.0);
    }
    let piece = DensityPiece::new(f64::NEG_INFINITY, f64::INFINITY, density).with_breakpoints(breaks);
    PickTriple::new(a, b, MeasureSpec::density(piece)?)
}

/// az + b + ∫ (1 + tz)/((t − z)(t² + 1)) dμ(t), the two kernel terms kept together.
pub fn evaluate_pick_rep(triple: &PickTriple, z: Complex64) -> Result<Complex64> {
    // real z is accepted off the support of μ
    if !(z.im >= 0.0) {
        return Err(Error::Domain(format!("evaluate_pick_rep needs Im z ≥ 0, got {z}")));
    }
    let kernel = |t: f64| (Complex64::new(1.0, 0.0) + z * t) / ((Complex64::new(t, 0.0) - z) * (t * t + 1.0));
    let cfg = QuadratureConfig::with_tolerances(1e-10, 1e-8);
    let integral = triple.measure.integrate_complex(kernel, &cfg)?;
    Ok(z * triple.a + triple.b + integral.value)
}

/// c + ∫ dμ(t)/(t + x)^λ on [0, ∞).
#[derive(Debug, Clone)]
pub struct StieltjesRep {
    pub lambda: f64,
    pub c: f64,
    pub measure: MeasureSpec,
}

impl StieltjesRep {
    pub fn new(lambda: f64, c: f64, measure: MeasureSpec) -> Result<Self> {
        if !(lambda > 0.0 && c >= 0.0) {
            return Err(Error::Domain(format!("Stieltjes representation needs λ > 0, c ≥ 0 (λ={lambda}, c={c})")));
        }
        if measure.point_masses.iter().any(|(t, _)| *t < 0.0) || measure.density_pieces.iter().any(|p| p.lo < 0.0) {
            return Err(Error::Domain("Stieltjes measure must live on [0, ∞)".into()));
        }
        Ok(Self { lambda, c, measure })
    }
}

pub fn evaluate_stieltjes(rep: &StieltjesRep, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("evaluate_stieltjes needs x > 0, got {x}")));
    }
    let l = rep.lambda;
    let cfg = QuadratureConfig::with_tolerances(1e-13, 1e-11);
    Ok(rep.c + rep.measure.integrate(|t| (t + x).powf(-l), &cfg)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_is_pick_and_square_is_not() {
        let grid = HalfPlaneGrid::coarse(30);
        assert!(verify_pick("log", &|z: Complex64| Ok(z.ln()), &grid, 1e-12).unwrap().is_verified());
        let r = verify_pick("square", &|z: Complex64| Ok(z * z), &grid, 1e-12).unwrap();
        let w = r.witness.unwrap();
        assert!(r.is_refuted());
        assert!((w.y.atan2(w.x) - 3.0 * PI / 4.0).abs() < 0.1);
    }

    #[test]
    fn evaluation_failure_is_reported() {
        let f = |z: Complex64| if z.norm() > 10.0 { Err(Error::Pole(0.0)) } else { Ok(z) };
        assert!(matches!(verify_pick("f", &f, &HalfPlaneGrid::coarse(10), 0.0), Err(Error::Evaluation(_))));
    }

    #[test]
    fn triples_of_simple_functions() {
        let affine = extract_pick_triple(Arc::new(|z| Ok(z * 2.0 + 3.0)), &PickExtraction::default()).unwrap();
        assert!((affine.a - 2.0).abs() < 1e-9 && (affine.b - 3.0).abs() < 1e-9);
        assert!((affine.measure.density_pieces[0].density)(0.7).abs() < 1e-9);

        let log = extract_pick_triple(Arc::new(|z: Complex64| Ok(z.ln())), &PickExtraction::default()).unwrap();
        assert!(log.a == 0.0 && log.b.abs() < 1e-12);
        let d = &log.measure.density_pieces[0].density;
        assert!((d(-0.3) - 1.0).abs() < 1e-6 && d(2.0).abs() < 1e-6);

        let konst = extract_pick_triple(Arc::new(|_| Ok(c(0.0, 1.0))), &PickExtraction::default()).unwrap();
        assert!((konst.measure.density_pieces[0].density)(5.0) - 1.0 / PI < 1e-12);
    }

    #[test]
    fn representation_values() {
        let log = PickTriple::new(
            0.0,
            0.0,
            MeasureSpec::density(DensityPiece::new(f64::NEG_INFINITY, 0.0, |_| 1.0)).unwrap(),
        )
        .unwrap();
        let v = evaluate_pick_rep(&log, c(2.0, 0.0)).unwrap();
        assert!((v - c(2f64.ln(), 0.0)).norm() < 1e-8);
        let lin = PickTriple::new(1.0, 0.0, MeasureSpec::zero()).unwrap();
        assert!((evaluate_pick_rep(&lin, c(0.0, 1.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        let flat = PickTriple::new(
            0.0,
            0.0,
            MeasureSpec::density(DensityPiece::new(f64::NEG_INFINITY, f64::INFINITY, |_| 1.0 / PI)).unwrap(),
        )
        .unwrap();
        assert!((evaluate_pick_rep(&flat, c(0.0, 1.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-8);
        assert!(evaluate_pick_rep(&flat, c(1.0, -1.0)).is_err());
    }

    #[test]
    fn stieltjes_values() {
        let at_zero = |l| StieltjesRep::new(l, 0.0, MeasureSpec::point_mass(0.0, 1.0).unwrap()).unwrap();
        assert!((evaluate_stieltjes(&at_zero(1.0), 2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((evaluate_stieltjes(&at_zero(2.0), 2.0).unwrap() - 0.25).abs() < 1e-15);
        let unit = StieltjesRep::new(1.0, 0.0, MeasureSpec::density(DensityPiece::new(0.0, 1.0, |_| 1.0)).unwrap()).unwrap();
        assert!((evaluate_stieltjes(&unit, 1.0).unwrap() - 2f64.ln()).abs() < 1e-12);
        assert!(StieltjesRep::new(1.0, -1.0, MeasureSpec::zero()).is_err());
    }
}
