//! Real functions on (0, ∞) with derivative chains.
//!
//! A [`Func`] carries a point evaluator, a jet evaluator (analytic when
//! available, finite differences up to order 8 otherwise) and optionally a
//! complex evaluator on ℂ∖(−∞, 0] used by the half-plane tests.

mod jet;
pub mod registry;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

pub use jet::Jet;
pub use registry::{builtin, registry, registry_ids};

use crate::error::{Error, Result};
use crate::numerics::diff::MAX_NUMERIC_ORDER;
use crate::numerics::derivative_n;

/// Jet orders allowed for analytic chains.
pub const MAX_JET_ORDER: usize = 400;

pub type EvalFn = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;
pub type JetFn = Arc<dyn Fn(f64, usize) -> Result<Jet> + Send + Sync>;
pub type ComplexFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;

/// A jet with absolute error bounds per coefficient (zero for analytic chains).
#[derive(Debug, Clone, PartialEq)]
pub struct JetEstimate {
    pub jet: Jet,
    pub err: Vec<f64>,
}

impl JetEstimate {
    pub fn new(jet: Jet, err: Vec<f64>) -> Self {
        debug_assert_eq!(jet.c.len(), err.len());
        Self { jet, err }
    }

    pub fn exact(jet: Jet) -> Self {
        let err = vec![0.0; jet.c.len()];
        Self { jet, err }
    }

    fn shifted(&self, sign: f64) -> Jet {
        let mut j = self.jet.clone();
        for (c, e) in j.c.iter_mut().zip(&self.err) {
            *c += sign * e;
        }
        j
    }

    fn is_exact(&self) -> bool {
        self.err.iter().all(|e| *e == 0.0)
    }

    /// Applies `op` and bounds the output error by perturbing the input.
    fn map(&self, op: impl Fn(&Jet) -> Result<Jet>) -> Result<Self> {
        let out = op(&self.jet)?;
        if self.is_exact() {
            return Ok(Self::exact(out));
        }
        let up = op(&self.shifted(1.0))?;
        let down = op(&self.shifted(-1.0))?;
        let err = (0..out.c.len())
            .map(|k| (up.c[k] - out.c[k]).abs().max((down.c[k] - out.c[k]).abs()))
            .collect();
        Ok(Self { jet: out, err })
    }

    fn zip(&self, other: &Self, op: impl Fn(&Jet, &Jet) -> Result<Jet>) -> Result<Self> {
        let out = op(&self.jet, &other.jet)?;
        if self.is_exact() && other.is_exact() {
            return Ok(Self::exact(out));
        }
        let mut err = vec![0.0; out.c.len()];
        for (a, b) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
            let p = op(&self.shifted(a), &other.shifted(b))?;
            for k in 0..err.len() {
                err[k] = f64::max(err[k], (p.c[k] - out.c[k]).abs());
            }
        }
        Ok(Self { jet: out, err })
    }
}

#[derive(Clone)]
enum JetSource {
    Analytic(JetFn),
    Numeric,
    /// Built from other chains; the flag records whether every base is analytic.
    Derived(Arc<dyn Fn(f64, usize) -> Result<JetEstimate> + Send + Sync>, bool),
}

/// A named real function with optional derivative chain and complex extension.
#[derive(Clone)]
pub struct Func {
    name: String,
    eval: EvalFn,
    jet: JetSource,
    complex: Option<ComplexFn>,
}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Func")
            .field("name", &self.name)
            .field("analytic", &self.has_analytic_jet())
            .field("complex", &self.complex.is_some())
            .finish()
    }
}

impl Func {
    /// A function known only through point values; derivatives come from finite differences.
    pub fn new(name: impl Into<String>, eval: impl Fn(f64) -> Result<f64> + Send + Sync + 'static) -> Self {
        Self { name: name.into(), eval: Arc::new(eval), jet: JetSource::Numeric, complex: None }
    }

    /// A function given by its jet; the value is the zeroth coefficient.
    pub fn from_jet(name: impl Into<String>, jet: impl Fn(f64, usize) -> Result<Jet> + Send + Sync + 'static) -> Self {
        let jet: JetFn = Arc::new(jet);
        let j2 = jet.clone();
        Self {
            name: name.into(),
            eval: Arc::new(move |x| Ok(j2(x, 0)?.c[0])),
            jet: JetSource::Analytic(jet),
            complex: None,
        }
    }

    /// A function whose jets carry their own error bounds, e.g. from quadrature.
    pub fn from_jet_estimate(
        name: impl Into<String>,
        eval: impl Fn(f64) -> Result<f64> + Send + Sync + 'static,
        jet: impl Fn(f64, usize) -> Result<JetEstimate> + Send + Sync + 'static,
    ) -> Self {
        Self::derived(name.into(), Arc::new(eval), None, false, jet)
    }

    pub fn with_eval(mut self, eval: impl Fn(f64) -> Result<f64> + Send + Sync + 'static) -> Self {
        self.eval = Arc::new(eval);
        self
    }

    pub fn with_complex(mut self, f: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        self.complex = Some(Arc::new(f));
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        (self.eval)(x)
    }

    pub fn has_analytic_jet(&self) -> bool {
        match &self.jet {
            JetSource::Analytic(_) => true,
            JetSource::Numeric => false,
            JetSource::Derived(_, exact) => *exact,
        }
    }

    pub fn has_complex(&self) -> bool {
        self.complex.is_some()
    }

    pub fn complex(&self, z: Complex64) -> Option<Result<Complex64>> {
        self.complex.as_ref().map(|f| f(z))
    }

    /// Largest jet order this function supports.
    pub fn max_order(&self) -> usize {
        if self.has_analytic_jet() {
            MAX_JET_ORDER
        } else {
            MAX_NUMERIC_ORDER
        }
    }

    /// Jet of order `order` at x with error bounds.
    pub fn jet_estimate(&self, x: f64, order: usize) -> Result<JetEstimate> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("jets are taken at x > 0, got {x}")));
        }
        match &self.jet {
            JetSource::Analytic(f) => {
                if order > MAX_JET_ORDER {
                    return Err(Error::OrderOverflow { order, max: MAX_JET_ORDER });
                }
                Ok(JetEstimate::exact(f(x, order)?))
            }
            JetSource::Derived(f, _) => f(x, order),
            JetSource::Numeric => {
                if order > MAX_NUMERIC_ORDER {
                    return Err(Error::OrderOverflow { order, max: MAX_NUMERIC_ORDER });
                }
                let eval = self.eval.clone();
                let g = move |t: f64| eval(t).unwrap_or(f64::NAN);
                let mut c = Vec::with_capacity(order + 1);
                let mut err = Vec::with_capacity(order + 1);
                let mut scale = 1.0;
                for k in 0..=order {
                    if k > 0 {
                        scale *= x / k as f64;
                    }
                    let d = derivative_n(&g, x, k, 0.0)?;
                    c.push(d.value * scale);
                    err.push(d.error * scale);
                }
                Ok(JetEstimate { jet: Jet { x, c }, err })
            }
        }
    }

    pub fn jet(&self, x: f64, order: usize) -> Result<Jet> {
        Ok(self.jet_estimate(x, order)?.jet)
    }

    fn derived(
        name: String,
        eval: EvalFn,
        complex: Option<ComplexFn>,
        exact: bool,
        jet: impl Fn(f64, usize) -> Result<JetEstimate> + Send + Sync + 'static,
    ) -> Self {
        Self { name, eval, jet: JetSource::Derived(Arc::new(jet), exact), complex }
    }

    fn unary(
        &self,
        name: String,
        value: impl Fn(f64, f64) -> Result<f64> + Send + Sync + 'static,
        complex: Option<ComplexFn>,
        op: impl Fn(&Jet) -> Result<Jet> + Send + Sync + 'static,
    ) -> Self {
        let base = self.clone();
        let b2 = self.clone();
        let eval: EvalFn = Arc::new(move |x| value(x, base.eval(x)?));
        Self::derived(name, eval, complex, self.has_analytic_jet(), move |x, n| b2.jet_estimate(x, n)?.map(&op))
    }

    /// x^α f(x).
    pub fn times_power(&self, alpha: f64) -> Self {
        if alpha == 0.0 {
            return self.clone();
        }
        let complex = self.complex.clone().map(|c| -> ComplexFn { Arc::new(move |z: Complex64| Ok(c(z)? * z.powf(alpha))) });
        self.unary(
            format!("x^{alpha}*{}", self.name),
            move |x, v| Ok(x.powf(alpha) * v),
            complex,
            move |j| Ok(j * &Jet::power(j.x, alpha, j.order())),
        )
    }

    pub fn scale(&self, a: f64) -> Self {
        let complex = self.complex.clone().map(|c| -> ComplexFn { Arc::new(move |z| Ok(c(z)? * a)) });
        self.unary(format!("{a}*{}", self.name), move |_, v| Ok(a * v), complex, move |j| Ok(j.clone().scale(a)))
    }

    pub fn add_constant(&self, a: f64) -> Self {
        let complex = self.complex.clone().map(|c| -> ComplexFn { Arc::new(move |z| Ok(c(z)? + a)) });
        self.unary(format!("{}+{a}", self.name), move |_, v| Ok(v + a), complex, move |j| Ok(j.clone().add_constant(a)))
    }

    pub fn exp(&self) -> Self {
        let complex = self.complex.clone().map(|c| -> ComplexFn { Arc::new(move |z| Ok(c(z)?.exp())) });
        self.unary(format!("exp({})", self.name), |_, v| Ok(v.exp()), complex, |j| Ok(j.exp()))
    }

    pub fn ln(&self) -> Self {
        self.unary(
            format!("log({})", self.name),
            |x, v| if v > 0.0 { Ok(v.ln()) } else { Err(Error::NonPositive(x)) },
            None,
            |j| j.ln(),
        )
    }

    /// f^p for positive f.
    pub fn powf(&self, p: f64) -> Self {
        self.unary(
            format!("({})^{p}", self.name),
            move |x, v| if v > 0.0 { Ok(v.powf(p)) } else { Err(Error::NonPositive(x)) },
            None,
            move |j| j.powf(p),
        )
    }

    /// f′. The jet consumes one order of the base chain.
    pub fn derivative(&self) -> Self {
        let base = self.clone();
        let b2 = self.clone();
        let eval: EvalFn = Arc::new(move |x| {
            let j = base.jet_estimate(x, 1)?;
            Ok(j.jet.c[1] / x)
        });
        Self::derived(format!("d/dx {}", self.name), eval, None, self.has_analytic_jet(), move |x, n| {
            let j = b2.jet_estimate(x, n + 1)?;
            j.map(|jet| Ok(jet.derivative()))
        })
    }

    /// −f′/f.
    pub fn neg_log_derivative(&self) -> Self {
        let base = self.clone();
        let b2 = self.clone();
        let eval: EvalFn = Arc::new(move |x| {
            let j = base.jet_estimate(x, 1)?;
            if !(j.jet.c[0] > 0.0) {
                return Err(Error::NonPositive(x));
            }
            Ok(-j.jet.c[1] / (x * j.jet.c[0]))
        });
        Self::derived(format!("-(log {})'", self.name), eval, None, self.has_analytic_jet(), move |x, n| {
            b2.jet_estimate(x, n + 1)?.map(|jet| Ok(-jet.ln()?.derivative()))
        })
    }

    fn binary(
        &self,
        other: &Func,
        name: String,
        value: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        complex: Option<ComplexFn>,
        op: impl Fn(&Jet, &Jet) -> Result<Jet> + Send + Sync + 'static,
    ) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let (a2, b2) = (self.clone(), other.clone());
        let eval: EvalFn = Arc::new(move |x| Ok(value(a.eval(x)?, b.eval(x)?)));
        let exact = self.has_analytic_jet() && other.has_analytic_jet();
        Self::derived(name, eval, complex, exact, move |x, n| {
            let ja = a2.jet_estimate(x, n)?;
            let jb = b2.jet_estimate(x, n)?;
            ja.zip(&jb, &op)
        })
    }

    pub fn mul(&self, other: &Func) -> Self {
        let complex = match (&self.complex, &other.complex) {
            (Some(a), Some(b)) => {
                let (a, b) = (a.clone(), b.clone());
                Some(Arc::new(move |z| Ok(a(z)? * b(z)?)) as ComplexFn)
            }
            _ => None,
        };
        self.binary(other, format!("{}*{}", self.name, other.name), |a, b| a * b, complex, |a, b| Ok(a * b))
    }

    pub fn sub(&self, other: &Func) -> Self {
        let complex = match (&self.complex, &other.complex) {
            (Some(a), Some(b)) => {
                let (a, b) = (a.clone(), b.clone());
                Some(Arc::new(move |z| Ok(a(z)? - b(z)?)) as ComplexFn)
            }
            _ => None,
        };
        self.binary(other, format!("{}-{}", self.name, other.name), |a, b| a - b, complex, |a, b| Ok(a - b))
    }

    /// t ↦ e^{−s f(t)}.
    pub fn exp_neg_scaled(&self, s: f64) -> Self {
        self.scale(-s).exp().renamed(format!("exp(-{s}*{})", self.name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_and_analytic_jets_agree() {
        let analytic = Func::from_jet("e", |x, n| Ok(Jet::exp_linear(x, 1.0, n)));
        let numeric = Func::new("e", |x: f64| Ok((-x).exp()));
        let a = analytic.jet_estimate(1.3, 4).unwrap();
        let b = numeric.jet_estimate(1.3, 4).unwrap();
        for k in 0..=4 {
            assert!((a.jet.c[k] - b.jet.c[k]).abs() < 1e-6, "k={k}");
            assert!((a.jet.c[k] - b.jet.c[k]).abs() <= 3.0 * b.err[k] + 1e-12);
        }
        assert!(numeric.jet_estimate(1.0, 9).is_err());
    }

    #[test]
    fn derivative_chain() {
        let f = Func::from_jet("x^3", |x, n| Ok(Jet::power(x, 3.0, n)));
        let d = f.derivative();
        assert!((d.eval(2.0).unwrap() - 12.0).abs() < 1e-13);
        assert!(d.has_analytic_jet());
        assert!((d.jet(2.0, 3).unwrap().derivative_value(1) - 12.0).abs() < 1e-12);
    }

    #[test]
    fn neg_log_derivative_of_exp() {
        let f = Func::from_jet("e", |x, n| Ok(Jet::exp_linear(x, 2.0, n)));
        let g = f.neg_log_derivative();
        let j = g.jet(0.7, 5).unwrap();
        assert!((j.c[0] - 2.0).abs() < 1e-14);
        assert!(j.c[1..].iter().all(|c| c.abs() < 1e-14));
    }
}
