use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::config::RuleBaseFile;
use super::inference::{aggregate, defuzz_centroid, InferenceResult, DEFAULT_SAMPLES};
use super::LinguisticVariable;
use crate::error::{Error, Result};

/// `variable IS term`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRef {
    pub variable: String,
    pub term: String,
}

impl TermRef {
    pub fn new(variable: impl Into<String>, term: impl Into<String>) -> Self {
        Self { variable: variable.into(), term: term.into() }
    }
}

impl fmt::Display for TermRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} IS {}", self.variable, self.term)
    }
}

/// `IF a IS x AND b IS y THEN out IS z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyRule {
    pub antecedents: Vec<TermRef>,
    pub consequent: TermRef,
}

impl FuzzyRule {
    pub fn new(antecedents: Vec<TermRef>, consequent: TermRef) -> Self {
        Self { antecedents, consequent }
    }
}

impl fmt::Display for FuzzyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("IF ")?;
        for (i, a) in self.antecedents.iter().enumerate() {
            if i > 0 {
                f.write_str(" AND ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, " THEN {}", self.consequent)
    }
}

fn split_keyword<'a>(text: &'a str, keyword: &str) -> Vec<&'a str> {
    let upper = text.to_ascii_uppercase();
    let needle = format!(" {keyword} ");
    let mut parts = Vec::new();
    let mut start = 0;
    while let Some(pos) = upper[start..].find(&needle) {
        parts.push(text[start..start + pos].trim());
        start += pos + needle.len();
    }
    parts.push(text[start..].trim());
    parts
}

fn parse_term_ref(text: &str, rule: &str) -> Result<TermRef> {
    match split_keyword(text, "IS").as_slice() {
        [var, term] if !var.is_empty() && !term.is_empty() => Ok(TermRef::new(*var, *term)),
        _ => Err(Error::RuleBase(format!("rule {rule:?}: expected `<variable> IS <term>`, got {text:?}"))),
    }
}

impl FromStr for FuzzyRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = match body.get(..3) {
            Some(head) if head.eq_ignore_ascii_case("IF ") => &body[3..],
            _ => return Err(Error::RuleBase(format!("rule {s:?} must start with IF"))),
        };
        let (cond, then) = match split_keyword(body, "THEN").as_slice() {
            [c, t] => (*c, *t),
            _ => return Err(Error::RuleBase(format!("rule {s:?} needs exactly one THEN"))),
        };
        let antecedents =
            split_keyword(cond, "AND").into_iter().map(|a| parse_term_ref(a, s)).collect::<Result<Vec<_>>>()?;
        Ok(FuzzyRule { antecedents, consequent: parse_term_ref(then, s)? })
    }
}

#[derive(Debug, Clone, PartialEq)]
struct ResolvedRule {
    antecedents: Vec<(usize, usize)>,
    consequent: usize,
}

/// Validated set of input variables, one output variable and rules.
///
/// Immutable once built; inference takes `&self`.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    name: String,
    inputs: Vec<LinguisticVariable>,
    output: LinguisticVariable,
    rules: Vec<FuzzyRule>,
    resolved: Vec<ResolvedRule>,
    samples: usize,
}

impl RuleBase {
    pub fn new(
        name: impl Into<String>,
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<FuzzyRule>,
    ) -> Result<Self> {
        if inputs.is_empty() {
            return Err(Error::RuleBase("at least one input variable is required".into()));
        }
        for (i, v) in inputs.iter().enumerate() {
            if inputs[..i].iter().any(|w| w.name() == v.name()) || v.name() == output.name() {
                return Err(Error::RuleBase(format!("variable {:?} declared twice", v.name())));
            }
        }
        if rules.is_empty() {
            return Err(Error::RuleBase("at least one rule is required".into()));
        }
        let resolved = rules.iter().map(|rule| resolve(rule, &inputs, &output)).collect::<Result<Vec<_>>>()?;
        Ok(Self { name: name.into(), inputs, output, rules, resolved, samples: DEFAULT_SAMPLES })
    }

    /// The bundled two-input visual-aesthetics rule base.
    pub fn default_aesthetics() -> Self {
        RuleBaseFile::default_aesthetics().into_rule_base().expect("bundled rule base is valid")
    }

    /// Number of output grid points used for aggregation and defuzzification.
    pub fn with_samples(mut self, samples: usize) -> Result<Self> {
        if samples < 2 {
            return Err(Error::RuleBase(format!("samples must be at least 2, got {samples}")));
        }
        self.samples = samples;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn input(&self, name: &str) -> Option<&LinguisticVariable> {
        self.inputs.iter().find(|v| v.name() == name)
    }

    pub fn output(&self) -> &LinguisticVariable {
        &self.output
    }

    pub fn rules(&self) -> &[FuzzyRule] {
        &self.rules
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub(crate) fn consequent_index(&self, rule: usize) -> usize {
        self.resolved[rule].consequent
    }

    /// SHA-256 of the canonical TOML form.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_toml().as_bytes()))
    }

    pub fn to_toml(&self) -> String {
        RuleBaseFile::from_rule_base(self).to_toml()
    }

    /// Firing strength of rule `index` given per-input term degrees.
    pub fn rule_strength(&self, index: usize, fuzzified: &[Vec<f64>]) -> f64 {
        self.resolved[index].antecedents.iter().map(|&(var, term)| fuzzified[var][term]).fold(1.0, f64::min)
    }

    /// Runs fuzzification, rule evaluation, aggregation and defuzzification.
    ///
    /// Every declared input needs exactly one value; values outside a
    /// universe are clamped to it.
    pub fn infer<K: AsRef<str>>(&self, inputs: impl IntoIterator<Item = (K, f64)>) -> Result<InferenceResult> {
        let mut values: Vec<Option<f64>> = vec![None; self.inputs.len()];
        for (name, x) in inputs {
            let name = name.as_ref();
            let idx = self
                .inputs
                .iter()
                .position(|v| v.name() == name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown input variable {name:?}")))?;
            if values[idx].replace(self.inputs[idx].clamp(x)?).is_some() {
                return Err(Error::InvalidInput(format!("input {name:?} given twice")));
            }
        }
        let crisp_inputs = values
            .iter()
            .zip(&self.inputs)
            .map(|(v, var)| v.ok_or_else(|| Error::InvalidInput(format!("missing input {:?}", var.name()))))
            .collect::<Result<Vec<f64>>>()?;

        let memberships =
            self.inputs.iter().zip(&crisp_inputs).map(|(var, &x)| var.fuzzify(x)).collect::<Result<Vec<_>>>()?;
        let strengths: Vec<f64> = (0..self.rules.len()).map(|i| self.rule_strength(i, &memberships)).collect();
        let curve = aggregate(&strengths, self, self.samples);
        let crisp = defuzz_centroid(&curve)?;
        Ok(InferenceResult { inputs: crisp_inputs, memberships, strengths, curve, crisp })
    }
}

fn resolve(rule: &FuzzyRule, inputs: &[LinguisticVariable], output: &LinguisticVariable) -> Result<ResolvedRule> {
    if rule.antecedents.is_empty() {
        return Err(Error::RuleBase(format!("rule `{rule}` has no antecedent")));
    }
    let antecedents =
        rule.antecedents
            .iter()
            .map(|a| {
                let var = inputs.iter().position(|v| v.name() == a.variable).ok_or_else(|| {
                    Error::RuleBase(format!("rule `{rule}`: unknown input variable {:?}", a.variable))
                })?;
                let term = inputs[var].term_index(&a.term).ok_or_else(|| {
                    Error::RuleBase(format!("rule `{rule}`: {:?} has no term {:?}", a.variable, a.term))
                })?;
                Ok((var, term))
            })
            .collect::<Result<Vec<_>>>()?;
    if rule.consequent.variable != output.name() {
        return Err(Error::RuleBase(format!("rule `{rule}`: consequent must use output variable {:?}", output.name())));
    }
    let consequent = output
        .term_index(&rule.consequent.term)
        .ok_or_else(|| Error::RuleBase(format!("rule `{rule}`: output has no term {:?}", rule.consequent.term)))?;
    Ok(ResolvedRule { antecedents, consequent })
}
