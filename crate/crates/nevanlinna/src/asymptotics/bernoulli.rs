//! Multiple Bernoulli numbers and polynomials from t^N e^{xt}/(e^t − 1)^N.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::{series_divide, PowerSeries};

pub const DEFAULT_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    pub n: usize,
    pub max_order: usize,
    /// B_{N,k} = B_{N,k}(0) for k = 0..=max_order.
    pub values: Vec<BigRational>,
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for k in 1..=n {
        let next = &f[k - 1] * BigInt::from(k);
        f.push(next);
    }
    f
}

impl BernoulliTable {
    pub fn build(n: usize, max_order: usize) -> Self {
        assert!(n >= 1, "N must be at least 1");
        let base = series_divide(&PowerSeries::one(max_order), &PowerSeries::expm1_over_t(max_order))
            .expect("(e^t - 1)/t has constant term 1");
        let g = base.powi(n as u32);
        let fact = factorials(max_order);
        let values = (0..=max_order)
            .map(|k| g.coeff(k) * BigRational::from_integer(fact[k].clone()))
            .collect();
        Self { n, max_order, values }
    }

    pub fn number(&self, k: usize) -> Result<&BigRational> {
        self.values.get(k).ok_or(Error::OrderOverflow { order: k, max: self.max_order })
    }

    /// Coefficients of B_{N,k}(x) in increasing powers of x.
    pub fn polynomial(&self, k: usize) -> Result<Vec<BigRational>> {
        if k > self.max_order {
            return Err(Error::OrderOverflow { order: k, max: self.max_order });
        }
        let fact = factorials(k);
        // B_{N,k}(x) = Σ_j C(k, j) B_{N,j} x^{k−j}
        let mut coeffs = vec![BigRational::zero(); k + 1];
        for j in 0..=k {
            let binom = &fact[k] / (&fact[j] * &fact[k - j]);
            coeffs[k - j] = BigRational::from_integer(binom) * &self.values[j];
        }
        Ok(coeffs)
    }

    /// Taylor coefficients (−1)^k B_{N,k}/k! of (t/(1 − e^{−t}))^N.
    pub fn taylor_coefficients(&self) -> Vec<BigRational> {
        let fact = factorials(self.max_order);
        self.values
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let c = b / BigRational::from_integer(fact[k].clone());
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }
}

fn cached() -> &'static [BernoulliTable; 3] {
    static TABLES: OnceLock<[BernoulliTable; 3]> = OnceLock::new();
    TABLES.get_or_init(|| {
        [
            BernoulliTable::build(1, DEFAULT_MAX_ORDER),
            BernoulliTable::build(2, DEFAULT_MAX_ORDER),
            BernoulliTable::build(3, DEFAULT_MAX_ORDER),
        ]
    })
}

/// Shared table for N ∈ {1, 2, 3}; built once.
pub fn table(n: usize) -> Result<&'static BernoulliTable> {
    if (1..=3).contains(&n) {
        Ok(&cached()[n - 1])
    } else {
        Err(Error::Domain(format!("cached Bernoulli tables cover N = 1..3, got {n}")))
    }
}

/// Classical Bernoulli number B_k (B_1 = −1/2) as f64.
pub fn bernoulli_f64(k: usize) -> f64 {
    static VALUES: OnceLock<Vec<f64>> = OnceLock::new();
    let v = VALUES.get_or_init(|| cached()[0].values.iter().map(|b| b.to_f64().unwrap()).collect());
    v[k]
}

/// Taylor coefficients of (t/(1 − e^{−t}))^N as f64, cached for N ≤ 3.
pub fn taylor_f64(n: usize) -> Result<&'static [f64]> {
    static VALUES: OnceLock<[Vec<f64>; 3]> = OnceLock::new();
    let v = VALUES.get_or_init(|| {
        let conv = |t: &BernoulliTable| t.taylor_coefficients().iter().map(|c| c.to_f64().unwrap()).collect();
        let c = cached();
        [conv(&c[0]), conv(&c[1]), conv(&c[2])]
    });
    table(n)?;
    Ok(&v[n - 1])
}

fn eval_poly(coeffs: &[BigRational], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap())
}

/// B_{N,k}(x).
pub fn multiple_bernoulli(n: usize, k: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("N must be at least 1".into()));
    }
    if k > DEFAULT_MAX_ORDER {
        return Err(Error::OrderOverflow { order: k, max: DEFAULT_MAX_ORDER });
    }
    let poly = match table(n) {
        Ok(t) => t.polynomial(k)?,
        Err(_) => BernoulliTable::build(n, k).polynomial(k)?,
    };
    Ok(eval_poly(&poly, x))
}

/// B_{N,k}(x) exactly for rational x.
pub fn multiple_bernoulli_exact(n: usize, k: usize, x: &BigRational) -> Result<BigRational> {
    if k > DEFAULT_MAX_ORDER {
        return Err(Error::OrderOverflow { order: k, max: DEFAULT_MAX_ORDER });
    }
    let poly = match table(n) {
        Ok(t) => t.polynomial(k)?,
        Err(_) => BernoulliTable::build(n, k).polynomial(k)?,
    };
    Ok(poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn classical_numbers() {
        let t = table(1).unwrap();
        assert_eq!(t.values[0], r(1, 1));
        assert_eq!(t.values[1], r(-1, 2));
        assert_eq!(t.values[2], r(1, 6));
        assert_eq!(t.values[12], r(-691, 2730));
        assert!((bernoulli_f64(20) + 529.124_242_424_242_4).abs() < 1e-9);
    }

    #[test]
    fn spec_examples() {
        assert!((multiple_bernoulli(1, 1, 0.0).unwrap() + 0.5).abs() < 1e-16);
        assert!((multiple_bernoulli(2, 0, 3.7).unwrap() - 1.0).abs() < 1e-16);
        assert!((multiple_bernoulli(1, 2, 0.0).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert!(matches!(multiple_bernoulli(1, 41, 0.0), Err(Error::OrderOverflow { .. })));
    }

    #[test]
    fn classical_polynomial() {
        // B_2(x) = x² − x + 1/6
        let x = r(3, 7);
        let v = multiple_bernoulli_exact(1, 2, &x).unwrap();
        assert_eq!(v, &x * &x - &x + r(1, 6));
    }

    #[test]
    fn reflection_symmetry() {
        // B_{N,k}(N − x) = (−1)^k B_{N,k}(x)
        for n in 1..=3usize {
            for k in 0..10 {
                let x = r(2, 5);
                let a = multiple_bernoulli_exact(n, k, &(BigRational::from_integer(n.into()) - &x)).unwrap();
                let b = multiple_bernoulli_exact(n, k, &x).unwrap();
                assert_eq!(a, if k % 2 == 0 { b } else { -b });
            }
        }
    }

    #[test]
    fn uncached_order() {
        assert!((multiple_bernoulli(4, 0, 1.0).unwrap() - 1.0).abs() < 1e-16);
        // B_{4,1}(x) = x − 2
        assert!((multiple_bernoulli(4, 1, 0.5).unwrap() + 1.5).abs() < 1e-15);
    }
}
