use serde::{Deserialize, Serialize};

use super::RuleBase;
use crate::error::{Error, Result};

pub const DEFAULT_SAMPLES: usize = 1001;

/// Membership degrees on a uniform grid spanning `[lo, hi]`, endpoints included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledCurve {
    pub lo: f64,
    pub hi: f64,
    pub values: Vec<f64>,
}

impl SampledCurve {
    pub fn x(&self, i: usize) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return self.lo;
        }
        self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64
    }

    /// `(x, degree)` pairs.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &m)| (self.x(i), m))
    }

    /// Samples `f` on `samples` uniform points of `[lo, hi]`.
    pub fn sample(lo: f64, hi: f64, samples: usize, f: impl Fn(f64) -> f64) -> Self {
        let mut curve = SampledCurve { lo, hi, values: vec![0.0; samples] };
        for i in 0..samples {
            curve.values[i] = f(curve.x(i));
        }
        curve
    }
}

/// Per-rule and aggregated results of one inference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InferenceResult {
    /// Crisp inputs after clamping, in declaration order.
    pub inputs: Vec<f64>,
    /// Term degrees per input variable.
    pub memberships: Vec<Vec<f64>>,
    /// Firing strength per rule.
    pub strengths: Vec<f64>,
    pub curve: SampledCurve,
    pub crisp: f64,
}

/// Clips every rule's consequent at its strength and takes the pointwise max.
pub fn aggregate(strengths: &[f64], rule_base: &RuleBase, samples: usize) -> SampledCurve {
    let output = rule_base.output();
    let (lo, hi) = output.universe();
    let clipped: Vec<_> = strengths
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0.0)
        .map(|(i, &s)| (output.terms()[rule_base.consequent_index(i)].1, s))
        .collect();
    SampledCurve::sample(lo, hi, samples.max(2), |x| {
        clipped.iter().map(|(mf, s)| mf.eval(x).min(*s)).fold(0.0, f64::max)
    })
}

/// Discrete centroid `Σ x·μ / Σ μ` over the sample grid.
pub fn defuzz_centroid(curve: &SampledCurve) -> Result<f64> {
    let (num, den) = curve.points().fold((0.0, 0.0), |(n, d), (x, m)| (n + x * m, d + m));
    if den.is_nan() || den <= 0.0 {
        return Err(Error::NoRuleFired);
    }
    Ok((num / den).clamp(curve.lo, curve.hi))
}
