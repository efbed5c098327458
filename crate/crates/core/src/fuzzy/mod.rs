//! Mamdani fuzzy inference over piecewise-linear membership functions.
//!
//! Rules AND their antecedents with `min`, clip consequents with `min`,
//! aggregate with pointwise `max`, and defuzzify by the discrete centroid of
//! the aggregated set sampled on a uniform grid.

mod config;
mod inference;
mod membership;
mod rules;
mod variable;

pub use config::{RuleBaseFile, DEFAULT_RULES_TOML};
pub use inference::{aggregate, defuzz_centroid, InferenceResult, SampledCurve, DEFAULT_SAMPLES};
pub use membership::{complement, intersection, union, MembershipFunction};
pub use rules::{FuzzyRule, RuleBase, TermRef};
pub use variable::LinguisticVariable;
