//! Verdicts of sampled class checks.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq)]
pub enum ClassLabel {
    Cm,
    CmOrder(f64),
    Lcm,
    Stieltjes(f64),
    Bernstein(f64),
    Thorin { lambda: f64, alpha: f64 },
    Pick,
    HornBernstein,
    Positivity,
    Other(String),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Cm => write!(f, "CM"),
            ClassLabel::CmOrder(a) => write!(f, "CM({a})"),
            ClassLabel::Lcm => write!(f, "LCM"),
            ClassLabel::Stieltjes(l) => write!(f, "S_{l}"),
            ClassLabel::Bernstein(l) => write!(f, "B_{l}"),
            ClassLabel::Thorin { lambda, alpha } => write!(f, "T_{{{lambda},{alpha}}}"),
            ClassLabel::Pick => write!(f, "Pick"),
            ClassLabel::HornBernstein => write!(f, "HornBernstein"),
            ClassLabel::Positivity => write!(f, "positivity"),
            ClassLabel::Other(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "verified-at-samples")]
    Verified,
    #[serde(rename = "refuted")]
    Refuted,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified-at-samples",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Sample point where a check failed: `x + iy`, derivative order and the offending value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub order: usize,
    pub value: f64,
}

impl Witness {
    pub fn real(x: f64, order: usize, value: f64) -> Self {
        Self { x, y: 0.0, order, value }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport {
    pub function: String,
    pub class_label: ClassLabel,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub grid: String,
    pub orders_checked: usize,
    pub tol: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ClassReport {
    pub fn new(function: impl Into<String>, class_label: ClassLabel, grid: impl Into<String>, orders: usize, tol: f64) -> Self {
        Self {
            function: function.into(),
            class_label,
            verdict: Verdict::Verified,
            witness: None,
            grid: grid.into(),
            orders_checked: orders,
            tol,
            notes: Vec::new(),
        }
    }

    pub fn refute(mut self, witness: Witness) -> Self {
        self.verdict = Verdict::Refuted;
        self.witness = Some(witness);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }

    /// Folds a sub-check into this report. A refutation wins; the first witness is kept.
    pub fn absorb(mut self, other: &ClassReport) -> Self {
        match (self.verdict, other.verdict) {
            (Verdict::Refuted, _) => {}
            (_, Verdict::Refuted) => {
                self.verdict = Verdict::Refuted;
                self.witness = other.witness;
            }
            (_, Verdict::Inconclusive) => self.verdict = Verdict::Inconclusive,
            _ => {}
        }
        self.orders_checked = self.orders_checked.max(other.orders_checked);
        self.notes.extend(other.notes.iter().cloned());
        self
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∈ {}: {}", self.function, self.class_label, self.verdict)?;
        if let Some(w) = &self.witness {
            if w.y == 0.0 {
                write!(f, " (x = {:.6e}, order {}, value {:.3e})", w.x, w.order, w.value)?;
            } else {
                write!(f, " (z = {:.6e}{:+.6e}i, value {:.3e})", w.x, w.y, w.value)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refutation_wins_when_absorbing() {
        let a = ClassReport::new("f", ClassLabel::Cm, "g", 3, 1e-7);
        let b = ClassReport::new("f", ClassLabel::Cm, "g", 5, 1e-7).refute(Witness::real(2.0, 1, -0.5));
        let c = a.absorb(&b);
        assert!(c.is_refuted());
        assert_eq!(c.witness.unwrap().order, 1);
        assert_eq!(c.orders_checked, 5);
    }

    #[test]
    fn json_shape() {
        let r = ClassReport::new("exp_neg", ClassLabel::Stieltjes(1.0), "0.1:10:5:log", 8, 1e-7);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["class_label"], "S_1");
        assert_eq!(v["verdict"], "verified-at-samples");
        assert!(v["witness"].is_null());
    }
}
