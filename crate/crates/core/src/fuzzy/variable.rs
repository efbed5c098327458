use serde::{Deserialize, Serialize};

use super::MembershipFunction;
use crate::error::{Error, Result};

/// A named variable over a closed universe with named fuzzy terms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinguisticVariable {
    name: String,
    universe: (f64, f64),
    terms: Vec<(String, MembershipFunction)>,
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        universe: (f64, f64),
        terms: impl IntoIterator<Item = (impl Into<String>, MembershipFunction)>,
    ) -> Result<Self> {
        let name = name.into();
        let (lo, hi) = universe;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::RuleBase(format!("variable {name:?}: universe [{lo}, {hi}] is empty")));
        }
        let terms: Vec<(String, MembershipFunction)> = terms.into_iter().map(|(n, mf)| (n.into(), mf)).collect();
        if terms.is_empty() {
            return Err(Error::RuleBase(format!("variable {name:?} has no terms")));
        }
        for (i, (term, mf)) in terms.iter().enumerate() {
            mf.validate()?;
            if terms[..i].iter().any(|(t, _)| t == term) {
                return Err(Error::RuleBase(format!("variable {name:?}: duplicate term {term:?}")));
            }
            let (a, d) = mf.support();
            if a < lo || d > hi {
                return Err(Error::RuleBase(format!(
                    "variable {name:?}: term {term:?} support [{a}, {d}] leaves universe [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { name, universe, terms })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> (f64, f64) {
        self.universe
    }

    pub fn terms(&self) -> &[(String, MembershipFunction)] {
        &self.terms
    }

    pub fn term_index(&self, term: &str) -> Option<usize> {
        self.terms.iter().position(|(t, _)| t == term)
    }

    pub fn term(&self, term: &str) -> Option<&MembershipFunction> {
        self.terms.iter().find(|(t, _)| t == term).map(|(_, mf)| mf)
    }

    /// Clamps `x` into the universe. Non-finite values are rejected.
    pub fn clamp(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::InvalidInput(format!("{}: value {x} is not finite", self.name)));
        }
        Ok(x.clamp(self.universe.0, self.universe.1))
    }

    /// Degree of `x` (clamped to the universe) in every term, in term order.
    pub fn fuzzify(&self, x: f64) -> Result<Vec<f64>> {
        let x = self.clamp(x)?;
        Ok(self.terms.iter().map(|(_, mf)| mf.eval(x)).collect())
    }
}
