//! TOML rule-base files. See `data/default_rules.toml` for the layout.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FuzzyRule, LinguisticVariable, MembershipFunction, RuleBase};
use crate::error::{Error, Result};

pub const DEFAULT_RULES_TOML: &str = include_str!("../../data/default_rules.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleBaseFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub rules: Vec<String>,
    #[serde(rename = "input")]
    pub inputs: Vec<VariableDef>,
    pub output: VariableDef,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDef {
    pub name: String,
    pub universe: [f64; 2],
    pub terms: Vec<TermDef>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDef {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangular: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trapezoidal: Option<[f64; 4]>,
}

impl TermDef {
    fn membership(&self) -> Result<MembershipFunction> {
        match (self.triangular, self.trapezoidal) {
            (Some([a, b, c]), None) => MembershipFunction::triangular(a, b, c),
            (None, Some([a, b, c, d])) => MembershipFunction::trapezoidal(a, b, c, d),
            _ => {
                Err(Error::RuleBase(format!("term {:?} needs exactly one of `triangular` or `trapezoidal`", self.name)))
            }
        }
    }

    fn from_membership(name: &str, mf: &MembershipFunction) -> Self {
        let (triangular, trapezoidal) = match *mf {
            MembershipFunction::Triangular(a, b, c) => (Some([a, b, c]), None),
            MembershipFunction::Trapezoidal(a, b, c, d) => (None, Some([a, b, c, d])),
        };
        Self { name: name.to_owned(), triangular, trapezoidal }
    }
}

impl VariableDef {
    fn into_variable(self) -> Result<LinguisticVariable> {
        let terms = self.terms.iter().map(|t| Ok((t.name.clone(), t.membership()?))).collect::<Result<Vec<_>>>()?;
        LinguisticVariable::new(self.name, (self.universe[0], self.universe[1]), terms)
    }

    fn from_variable(v: &LinguisticVariable) -> Self {
        let (lo, hi) = v.universe();
        Self {
            name: v.name().to_owned(),
            universe: [lo, hi],
            terms: v.terms().iter().map(|(n, mf)| TermDef::from_membership(n, mf)).collect(),
        }
    }
}

impl RuleBaseFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::RuleBase(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text).map_err(|e| Error::RuleBase(format!("{}: {e}", path.display())))
    }

    pub fn default_aesthetics() -> Self {
        Self::parse(DEFAULT_RULES_TOML).expect("bundled rule file parses")
    }

    pub fn into_rule_base(self) -> Result<RuleBase> {
        let rules = self.rules.iter().map(|r| r.parse::<FuzzyRule>()).collect::<Result<Vec<_>>>()?;
        let inputs = self.inputs.into_iter().map(VariableDef::into_variable).collect::<Result<Vec<_>>>()?;
        let rb = RuleBase::new(self.name, inputs, self.output.into_variable()?, rules)?;
        match self.samples {
            Some(n) => rb.with_samples(n),
            None => Ok(rb),
        }
    }

    pub fn from_rule_base(rb: &RuleBase) -> Self {
        Self {
            name: rb.name().to_owned(),
            samples: Some(rb.samples()),
            rules: rb.rules().iter().map(ToString::to_string).collect(),
            inputs: rb.inputs().iter().map(VariableDef::from_variable).collect(),
            output: VariableDef::from_variable(rb.output()),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("rule base serializes to TOML")
    }
}

impl RuleBase {
    /// Loads and validates a rule-base file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        RuleBaseFile::load(path)?.into_rule_base()
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        RuleBaseFile::parse(text)?.into_rule_base()
    }
}
