use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Logarithmic,
}

/// Sampling grid on the real line, written `min:max:count:spacing`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn new(min: f64, max: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if !(min < max) || count == 0 || !min.is_finite() || !max.is_finite() {
            return Err(Error::Domain(format!("invalid grid {min}:{max}:{count}")));
        }
        if spacing == Spacing::Logarithmic && min <= 0.0 {
            return Err(Error::Domain("logarithmic grid needs min > 0".into()));
        }
        Ok(Self { min, max, count, spacing })
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Self {
        Self::new(min, max, count, Spacing::Linear).expect("valid linear grid")
    }

    pub fn log(min: f64, max: f64, count: usize) -> Self {
        Self::new(min, max, count, Spacing::Logarithmic).expect("valid log grid")
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let s = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.min + (self.max - self.min) * s,
                    Spacing::Logarithmic => (self.min.ln() + (self.max.ln() - self.min.ln()) * s).exp(),
                }
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.spacing {
            Spacing::Linear => "lin",
            Spacing::Logarithmic => "log",
        };
        write!(f, "{}:{}:{}:{}", self.min, self.max, self.count, s)
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("grid '{s}' is not min:max:count:spacing")));
        }
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| Error::Parse(format!("{p}: {e}")));
        let count = parts[2].trim().parse::<usize>().map_err(|e| Error::Parse(format!("{}: {e}", parts[2])))?;
        let spacing = match parts[3].trim() {
            "lin" | "linear" => Spacing::Linear,
            "log" | "logarithmic" => Spacing::Logarithmic,
            other => return Err(Error::Parse(format!("unknown spacing '{other}'"))),
        };
        Grid::new(num(parts[0])?, num(parts[1])?, count, spacing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let g: Grid = "0.5:10:20:log".parse().unwrap();
        assert_eq!(g.count, 20);
        assert_eq!(g.to_string().parse::<Grid>().unwrap(), g);
        let p = g.points();
        assert!((p[0] - 0.5).abs() < 1e-15 && (p[19] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!("1:0:3:lin".parse::<Grid>().is_err());
        assert!("0:1:3:log".parse::<Grid>().is_err());
        assert!("0:1:3".parse::<Grid>().is_err());
        assert!("0:1:3:cubic".parse::<Grid>().is_err());
    }
}
