//! Central differences of order up to 8 with Ridders-style extrapolation.

use crate::error::{Error, Result};
use crate::numerics::quad::Estimate;

pub const MAX_NUMERIC_ORDER: usize = 8;

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

fn central_difference(f: &dyn Fn(f64) -> f64, x: f64, n: usize, h: f64) -> f64 {
    let half = n as f64 / 2.0;
    let mut s = 0.0;
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * binomial(n, j) * f(x + (half - j as f64) * h);
    }
    s / h.powi(n as i32)
}

/// n-th derivative of `f` at `x`.
///
/// `step_hint <= 0` selects a default initial step `0.8|x|/n` (or `0.8/n` at
/// the origin), small enough that the stencil stays on one side of zero.
pub fn derivative_n(f: &dyn Fn(f64) -> f64, x: f64, n: usize, step_hint: f64) -> Result<Estimate> {
    if n == 0 {
        return Ok(Estimate { value: f(x), error: 0.0 });
    }
    if n > MAX_NUMERIC_ORDER {
        return Err(Error::Domain(format!("numeric derivative order {n} exceeds {MAX_NUMERIC_ORDER}")));
    }
    let h0 = if step_hint > 0.0 {
        step_hint
    } else {
        let scale = if x != 0.0 { x.abs() } else { 1.0 };
        0.8 * scale / n.max(2) as f64
    };
    const CON: f64 = 1.4;
    const CON2: f64 = CON * CON;
    const NTAB: usize = 12;
    let mut table = vec![vec![0.0; NTAB]; NTAB];
    let mut best = f64::NAN;
    let mut err = f64::INFINITY;
    let mut h = h0;
    let floor = 1e3 * f64::EPSILON * x.abs().max(1.0);
    for i in 0..NTAB {
        if h < floor {
            break;
        }
        table[0][i] = central_difference(f, x, n, h);
        let mut fac = CON2;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= CON2;
            let e = (table[j][i] - table[j - 1][i]).abs().max((table[j][i] - table[j - 1][i - 1]).abs());
            if e <= err {
                err = e;
                best = table[j][i];
            }
        }
        if i > 0 && (table[i][i] - table[i - 1][i - 1]).abs() >= 2.0 * err {
            break;
        }
        h /= CON;
    }
    if best.is_nan() {
        return Err(Error::StepUnderflow(x));
    }
    Ok(Estimate { value: best, error: err })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_third_derivative_at_zero() {
        let d = derivative_n(&|x: f64| x.exp(), 0.0, 3, 0.0).unwrap();
        assert!((d.value - 1.0).abs() < 1e-8, "{}", d.value);
    }

    #[test]
    fn reciprocal_second_derivative() {
        let d = derivative_n(&|x: f64| 1.0 / x, 2.0, 2, 0.0).unwrap();
        assert!((d.value - 0.25).abs() < 1e-8);
    }

    #[test]
    fn order_zero_is_exact() {
        let f = |x: f64| x.sin() * 3.7;
        assert_eq!(derivative_n(&f, 0.3, 0, 0.0).unwrap().value, f(0.3));
    }

    #[test]
    fn order_eight() {
        let d = derivative_n(&|x: f64| (-x).exp(), 1.0, 8, 0.0).unwrap();
        let err = (d.value - (-1f64).exp()).abs();
        assert!(err < 1e-3, "{}", d.value);
        assert!(err <= 2.0 * d.error);
    }

    #[test]
    fn order_nine_rejected() {
        assert!(derivative_n(&|x: f64| x, 1.0, 9, 0.0).is_err());
    }
}
