//! Truncated power series with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coefficients: Vec<BigRational>,
}

impl PowerSeries {
    /// Builds a series from coefficients; the truncation order is `len - 1`.
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        assert!(!coefficients.is_empty(), "a power series needs at least one coefficient");
        Self { coefficients }
    }

    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let mut c: Vec<BigRational> = values.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        c.resize(order + 1, BigRational::zero());
        c.truncate(order + 1);
        Self::new(c)
    }

    pub fn one(order: usize) -> Self {
        Self::from_integers(&[1], order)
    }

    /// e^{a t} with rational a.
    pub fn exp_scaled(a: &BigRational, order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        c.push(term.clone());
        for k in 1..=order {
            term = term * a / BigRational::from_integer(BigInt::from(k));
            c.push(term.clone());
        }
        Self::new(c)
    }

    /// (e^t - 1)/t = Σ t^k/(k+1)!.
    pub fn expm1_over_t(order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let mut fact = BigInt::one();
        for k in 0..=order {
            fact *= BigInt::from(k + 1);
            c.push(BigRational::new(BigInt::one(), fact.clone()));
        }
        Self::new(c)
    }

    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coefficients[k]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coefficients.truncate(order + 1);
        self
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one(self.truncation_order());
        for _ in 0..n {
            acc = series_multiply(&acc, self);
        }
        acc
    }
}

/// Cauchy product truncated at the smaller order.
pub fn series_multiply(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let order = a.truncation_order().min(b.truncation_order());
    let mut c = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut s = BigRational::zero();
        for j in 0..=k {
            if a.coefficients[j].is_zero() || b.coefficients[k - j].is_zero() {
                continue;
            }
            s += &a.coefficients[j] * &b.coefficients[k - j];
        }
        c.push(s);
    }
    PowerSeries::new(c)
}

/// Long division `numerator / denominator` truncated at the smaller order.
///
/// Any common power of t must already be cancelled by the caller.
pub fn series_divide(numerator: &PowerSeries, denominator: &PowerSeries) -> Result<PowerSeries> {
    let d0 = &denominator.coefficients[0];
    if d0.is_zero() {
        return Err(Error::DegenerateDivisor);
    }
    let order = numerator.truncation_order().min(denominator.truncation_order());
    let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut s = numerator.coefficients[k].clone();
        for j in 1..=k {
            if denominator.coefficients[j].is_zero() {
                continue;
            }
            s -= &denominator.coefficients[j] * &q[k - j];
        }
        q.push(s / d0);
    }
    Ok(PowerSeries::new(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn geometric_series() {
        let q = series_divide(&PowerSeries::one(6), &PowerSeries::from_integers(&[1, 1], 6)).unwrap();
        for k in 0..=6 {
            assert_eq!(q.coeff(k), &r(if k % 2 == 0 { 1 } else { -1 }, 1));
        }
    }

    #[test]
    fn bernoulli_generating_function() {
        let b = series_divide(&PowerSeries::one(12), &PowerSeries::expm1_over_t(12)).unwrap();
        assert_eq!(b.coeff(0), &r(1, 1));
        assert_eq!(b.coeff(1), &r(-1, 2));
        assert_eq!(b.coeff(2), &r(1, 12));
        assert_eq!(b.coeff(3), &r(0, 1));
        assert_eq!(b.coeff(4), &r(-1, 720));
        // recurrence Σ_{j<k} C(k, j) B_j = 0 with B_j = j! b_j
        let mut fact = vec![BigInt::one()];
        for k in 1..=12usize {
            let prev = fact[k - 1].clone();
            fact.push(prev * BigInt::from(k));
        }
        for k in 2..=12usize {
            let mut s = BigRational::zero();
            for j in 0..k {
                let binom = &fact[k] / (&fact[j] * &fact[k - j]);
                s += BigRational::from_integer(binom) * b.coeff(j) * BigRational::from_integer(fact[j].clone());
            }
            assert!(s.is_zero(), "k = {k}");
        }
    }

    #[test]
    fn squared_generating_function_starts_at_one() {
        let b = series_divide(&PowerSeries::one(8), &PowerSeries::expm1_over_t(8)).unwrap();
        assert_eq!(b.powi(2).coeff(0), &r(1, 1));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let d = PowerSeries::from_integers(&[0, 1], 4);
        assert_eq!(series_divide(&PowerSeries::one(4), &d), Err(Error::DegenerateDivisor));
    }
}
