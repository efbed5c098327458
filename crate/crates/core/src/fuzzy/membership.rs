use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Triangular or trapezoidal membership function.
///
/// Evaluates to 0 outside `[a, c]` (triangle) or `[a, d]` (trapezoid) and to
/// 1 on the core. Coincident breakpoints give vertical edges whose shared
/// point has degree 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MembershipFunction {
    Triangular(f64, f64, f64),
    Trapezoidal(f64, f64, f64, f64),
}

impl MembershipFunction {
    pub fn triangular(a: f64, b: f64, c: f64) -> Result<Self> {
        let mf = MembershipFunction::Triangular(a, b, c);
        mf.validate()?;
        Ok(mf)
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let mf = MembershipFunction::Trapezoidal(a, b, c, d);
        mf.validate()?;
        Ok(mf)
    }

    fn corners(&self) -> [f64; 4] {
        match *self {
            MembershipFunction::Triangular(a, b, c) => [a, b, b, c],
            MembershipFunction::Trapezoidal(a, b, c, d) => [a, b, c, d],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.corners();
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::RuleBase(format!("{self}: breakpoints must be finite")));
        }
        if !(p[0] <= p[1] && p[1] <= p[2] && p[2] <= p[3]) {
            return Err(Error::RuleBase(format!("{self}: breakpoints must be non-decreasing")));
        }
        Ok(())
    }

    /// Closed interval outside which the degree is zero.
    pub fn support(&self) -> (f64, f64) {
        let p = self.corners();
        (p[0], p[3])
    }

    /// Interval on which the degree is one.
    pub fn core(&self) -> (f64, f64) {
        let p = self.corners();
        (p[1], p[2])
    }

    /// Midpoint of the core.
    pub fn peak(&self) -> f64 {
        let (lo, hi) = self.core();
        (lo + hi) / 2.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        let [a, b, c, d] = self.corners();
        if x.is_nan() || x < a || x > d {
            0.0
        } else if x < b {
            (x - a) / (b - a)
        } else if x <= c {
            1.0
        } else {
            (d - x) / (d - c)
        }
    }
}

impl fmt::Display for MembershipFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipFunction::Triangular(a, b, c) => write!(f, "triangular({a}, {b}, {c})"),
            MembershipFunction::Trapezoidal(a, b, c, d) => write!(f, "trapezoidal({a}, {b}, {c}, {d})"),
        }
    }
}

/// Fuzzy AND of two degrees.
pub fn intersection(a: f64, b: f64) -> f64 {
    a.min(b)
}

/// Fuzzy OR of two degrees.
pub fn union(a: f64, b: f64) -> f64 {
    a.max(b)
}

/// Fuzzy NOT.
pub fn complement(a: f64) -> f64 {
    1.0 - a
}
