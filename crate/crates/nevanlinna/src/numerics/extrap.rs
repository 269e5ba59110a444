use crate::error::{Error, Result};
use crate::numerics::quad::Estimate;

/// Polynomial (Neville) extrapolation of `value(h)` to `h = 0`.
///
/// The error estimate is the change contributed by the last sample.
pub fn extrapolate_limit(samples: &[(f64, f64)]) -> Result<Estimate> {
    let n = samples.len();
    let decreasing = samples.windows(2).all(|w| w[1].0 < w[0].0) && samples.iter().all(|s| s.0 > 0.0);
    if n < 3 || !decreasing {
        return Err(Error::InsufficientSamples { needed: 3, got: if decreasing { n } else { 0 } });
    }
    let h: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut p: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut lower = (p[0], p[1]);
    // After round m, p[i] holds the interpolant through samples i..=i+m at 0.
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (h[i] * p[i + 1] - h[i + m] * p[i]) / (h[i] - h[i + m]);
        }
        if m == n - 2 {
            lower = (p[0], p[1]);
        }
    }
    let error = (p[0] - lower.0).abs().min((p[0] - lower.1).abs());
    Ok(Estimate { value: p[0], error })
}
