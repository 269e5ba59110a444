use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::report::{ClassLabel, ClassReport, Witness};

pub const MAX_LOWNER_POINTS: usize = 12;

/// K_f(s,t) = (f(s) − f(t))/(s − t), with f′ on the diagonal.
pub fn lowner_matrix(f: &dyn Fn(f64) -> f64, df: &dyn Fn(f64) -> f64, points: &[f64]) -> Result<DMatrix<f64>> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::DegeneratePoints(points[i], points[j]));
            }
        }
    }
    let values: Vec<f64> = points.iter().map(|&t| f(t)).collect();
    Ok(DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            df(points[i])
        } else {
            (values[i] - values[j]) / (points[i] - points[j])
        }
    }))
}

/// PSD test of the Löwner kernel; the tolerance is scaled by the largest entry.
pub fn lowner_psd(
    name: &str,
    f: &dyn Fn(f64) -> f64,
    df: &dyn Fn(f64) -> f64,
    points: &[f64],
    tol: f64,
) -> Result<ClassReport> {
    if points.len() > MAX_LOWNER_POINTS {
        return Err(Error::Domain(format!("at most {MAX_LOWNER_POINTS} points, got {}", points.len())));
    }
    let k = lowner_matrix(f, df, points)?;
    let scale = k.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let eig = k.symmetric_eigen();
    let (idx, min) = eig.eigenvalues.iter().enumerate().fold((0, f64::INFINITY), |a, (i, &v)| if v < a.1 { (i, v) } else { a });
    let report = ClassReport::new(name, ClassLabel::Other("Lowner-PSD".into()), format!("{points:?}"), 0, tol);
    if min < -tol * scale {
        // witness: the point carrying the largest weight in the offending eigenvector
        let v = eig.eigenvectors.column(idx);
        let at = (0..points.len()).max_by(|&a, &b| v[a].abs().total_cmp(&v[b].abs())).unwrap_or(0);
        return Ok(report.refute(Witness::real(points[at], 0, min)));
    }
    Ok(report.note(format!("min eigenvalue {min:.3e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_is_operator_monotone() {
        let r = lowner_psd("log", &f64::ln, &|t| 1.0 / t, &[1.0, 2.0, 4.0, 8.0], 1e-10).unwrap();
        assert!(r.is_verified());
        let r = lowner_psd("id", &|t| t, &|_| 1.0, &[0.3, 1.0, 7.0], 1e-10).unwrap();
        assert!(r.is_verified());
    }

    #[test]
    fn square_is_not() {
        let r = lowner_psd("sq", &|t| t * t, &|t| 2.0 * t, &[1.0, 2.0], 1e-10).unwrap();
        assert!(r.is_refuted());
        let k = lowner_matrix(&|t| t * t, &|t| 2.0 * t, &[1.0, 2.0]).unwrap();
        assert!((k.determinant() + 1.0).abs() < 1e-14);
        assert!(matches!(lowner_psd("sq", &|t| t, &|_| 1.0, &[1.0, 1.0], 0.0), Err(Error::DegeneratePoints(..))));
    }
}
