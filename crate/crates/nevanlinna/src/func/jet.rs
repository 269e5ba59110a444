//! Scaled Taylor jets.
//!
//! A jet of f at x > 0 stores c_k = f^{(k)}(x) x^k / k!, the coefficients of
//! v ↦ f(x(1 + v)). Sign tests on derivatives become sign tests on c_k, and
//! the scaling keeps coefficients of moderate size at high order.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::special::polygamma_real;

#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    pub x: f64,
    pub c: Vec<f64>,
}

fn binomial_series(alpha: f64, n: usize) -> Vec<f64> {
    let mut out = vec![1.0; n + 1];
    for k in 1..=n {
        out[k] = out[k - 1] * (alpha - (k - 1) as f64) / k as f64;
    }
    out
}

impl Jet {
    pub fn constant(x: f64, value: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = value;
        Self { x, c }
    }

    /// The jet of y ↦ y.
    pub fn variable(x: f64, order: usize) -> Self {
        let mut c = vec![0.0; order + 1];
        c[0] = x;
        if order >= 1 {
            c[1] = x;
        }
        Self { x, c }
    }

    /// y ↦ y^α.
    pub fn power(x: f64, alpha: f64, order: usize) -> Self {
        let scale = x.powf(alpha);
        let c = binomial_series(alpha, order).into_iter().map(|b| b * scale).collect();
        Self { x, c }
    }

    /// y ↦ e^{−a y}.
    pub fn exp_linear(x: f64, a: f64, order: usize) -> Self {
        let mut c = vec![(-a * x).exp(); order + 1];
        for k in 1..=order {
            c[k] = c[k - 1] * (-a * x) / k as f64;
        }
        Self { x, c }
    }

    /// y ↦ 1 − e^{−a y}, with the constant term taken from expm1.
    pub fn one_minus_exp_linear(x: f64, a: f64, order: usize) -> Self {
        let mut j = -Self::exp_linear(x, a, order);
        j.c[0] = -(-a * x).exp_m1();
        j
    }

    /// y ↦ ln y.
    pub fn ln_variable(x: f64, order: usize) -> Self {
        let mut c = vec![x.ln(); order + 1];
        for k in 1..=order {
            c[k] = if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
        }
        Self { x, c }
    }

    /// y ↦ ln(y + s) for s > −x.
    pub fn ln_shifted(x: f64, s: f64, order: usize) -> Self {
        let r = x / (x + s);
        let mut c = vec![(x + s).ln(); order + 1];
        let mut p = 1.0;
        for k in 1..=order {
            p *= r;
            c[k] = if k % 2 == 1 { p } else { -p } / k as f64;
        }
        Self { x, c }
    }

    /// y ↦ ln(1 + 1/y), with the cancellation in (x/(x+1))^k − 1 avoided.
    pub fn ln1p_inv(x: f64, order: usize) -> Self {
        let mut c = vec![(1.0 / x).ln_1p(); order + 1];
        let l = (-1.0 / (x + 1.0)).ln_1p();
        for k in 1..=order {
            let d = (k as f64 * l).exp_m1();
            c[k] = if k % 2 == 1 { d } else { -d } / k as f64;
        }
        Self { x, c }
    }

    /// y ↦ 1/(y + s) for s > −x.
    pub fn recip_shifted(x: f64, s: f64, order: usize) -> Self {
        let r = -x / (x + s);
        let mut c = vec![1.0 / (x + s); order + 1];
        for k in 1..=order {
            c[k] = c[k - 1] * r;
        }
        Self { x, c }
    }

    /// y ↦ ψ^{(m)}(y + s), y + s off the poles.
    pub fn polygamma_shifted(m: usize, x: f64, s: f64, order: usize) -> Result<Self> {
        let mut c = Vec::with_capacity(order + 1);
        let mut scale = 1.0;
        for k in 0..=order {
            if k > 0 {
                scale *= x / k as f64;
            }
            c.push(polygamma_real(m + k, x + s)? * scale);
        }
        Ok(Self { x, c })
    }

    /// y ↦ ln Γ(y + s) for y + s > 0.
    pub fn ln_gamma_shifted(x: f64, s: f64, order: usize) -> Result<Self> {
        if !(x + s > 0.0) {
            return Err(Error::Domain(format!("ln Γ jet needs a positive argument, got {}", x + s)));
        }
        let mut c = vec![crate::special::ln_gamma(x + s)];
        if order > 0 {
            let psi = Self::polygamma_shifted(0, x, s, order - 1)?;
            for k in 1..=order {
                c.push(psi.c[k - 1] * x / k as f64);
            }
        }
        Ok(Self { x, c })
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// f^{(k)}(x).
    pub fn derivative_value(&self, k: usize) -> f64 {
        let mut s = self.c[k];
        for j in 1..=k {
            s *= j as f64 / self.x;
        }
        s
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.c.truncate(order + 1);
        self
    }

    fn matched(&self, other: &Jet) -> usize {
        debug_assert!(self.x == other.x, "jets taken at different points");
        self.order().min(other.order())
    }

    pub fn scale(mut self, a: f64) -> Self {
        self.c.iter_mut().for_each(|v| *v *= a);
        self
    }

    pub fn add_constant(mut self, a: f64) -> Self {
        self.c[0] += a;
        self
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.order();
        let f0 = self.c[0];
        if f0 == 0.0 {
            return Err(Error::DegenerateDivisor);
        }
        let mut r = vec![0.0; n + 1];
        r[0] = 1.0 / f0;
        for k in 1..=n {
            let s: f64 = (1..=k).map(|j| self.c[j] * r[k - j]).sum();
            r[k] = -s / f0;
        }
        Ok(Self { x: self.x, c: r })
    }

    pub fn div(&self, other: &Jet) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut e = vec![0.0; n + 1];
        e[0] = self.c[0].exp();
        for k in 1..=n {
            let s: f64 = (1..=k).map(|j| j as f64 * self.c[j] * e[k - j]).sum();
            e[k] = s / k as f64;
        }
        Self { x: self.x, c: e }
    }

    pub fn ln(&self) -> Result<Self> {
        let n = self.order();
        let f0 = self.c[0];
        if !(f0 > 0.0) {
            return Err(Error::NonPositive(self.x));
        }
        let mut l = vec![0.0; n + 1];
        l[0] = f0.ln();
        for k in 1..=n {
            let s: f64 = (1..k).map(|j| j as f64 * l[j] * self.c[k - j]).sum();
            l[k] = (k as f64 * self.c[k] - s) / (k as f64 * f0);
        }
        Ok(Self { x: self.x, c: l })
    }

    /// f^α for f(x) > 0.
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        let n = self.order();
        let f0 = self.c[0];
        if !(f0 > 0.0) {
            return Err(Error::NonPositive(self.x));
        }
        let mut p = vec![0.0; n + 1];
        p[0] = f0.powf(alpha);
        for k in 1..=n {
            let s: f64 = (1..=k)
                .map(|j| (alpha * j as f64 - (k - j) as f64) * self.c[j] * p[k - j])
                .sum();
            p[k] = s / (k as f64 * f0);
        }
        Ok(Self { x: self.x, c: p })
    }

    /// Jet of f′; one order shorter.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let c = (0..n).map(|j| (j + 1) as f64 * self.c[j + 1] / self.x).collect();
        Self { x: self.x, c }
    }

    /// Most negative (−1)^k c_k relative to |c_0| + 1, with its order.
    pub fn cm_defect(&self) -> (usize, f64) {
        let scale = self.c[0].abs() + 1.0;
        let mut worst = (0, f64::INFINITY);
        for (k, v) in self.c.iter().enumerate() {
            let s = if k % 2 == 0 { *v } else { -*v } / scale;
            if s < worst.1 {
                worst = (k, s);
            }
        }
        worst
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.matched(rhs);
        Jet { x: self.x, c: (0..=n).map(|k| self.c[k] + rhs.c[k]).collect() }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let n = self.matched(rhs);
        Jet { x: self.x, c: (0..=n).map(|k| self.c[k] - rhs.c[k]).collect() }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.matched(rhs);
        let c = (0..=n).map(|k| (0..=k).map(|j| self.c[j] * rhs.c[k - j]).sum()).collect();
        Jet { x: self.x, c }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(mut self) -> Jet {
        self.c.iter_mut().for_each(|v| *v = -*v);
        self
    }
}
