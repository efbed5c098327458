//! Loads a rule base from TOML text and compares it with the default.
//!
//! cargo run --example custom_rules

use palette_fis::fuzzy::{RuleBase, RuleBaseFile};

const STRICT: &str = r#"
name = "strict-aesthetics"
samples = 1001
rules = [
  "IF Color Harmony IS Poor THEN Visual Aesthetics IS Low",
  "IF Color Harmony IS Good AND Font Popularity IS Low THEN Visual Aesthetics IS Low",
  "IF Color Harmony IS Good AND Font Popularity IS High THEN Visual Aesthetics IS High",
  "IF Color Harmony IS Strong THEN Visual Aesthetics IS High",
]

[[input]]
name = "Color Harmony"
universe = [0.0, 7.0]
terms = [
  { name = "Poor", trapezoidal = [0.0, 0.0, 1.5, 3.0] },
  { name = "Good", triangular = [2.0, 3.5, 5.0] },
  { name = "Strong", trapezoidal = [4.0, 5.5, 7.0, 7.0] },
]

[[input]]
name = "Font Popularity"
universe = [0.0, 100.0]
terms = [
  { name = "Low", trapezoidal = [0.0, 0.0, 30.0, 50.0] },
  { name = "High", trapezoidal = [40.0, 70.0, 100.0, 100.0] },
]

[output]
name = "Visual Aesthetics"
universe = [0.0, 100.0]
terms = [
  { name = "Low", trapezoidal = [0.0, 0.0, 20.0, 50.0] },
  { name = "High", trapezoidal = [50.0, 80.0, 100.0, 100.0] },
]
"#;

fn main() -> palette_fis::Result<()> {
    let strict = RuleBase::from_toml(STRICT)?;
    let default = RuleBase::default_aesthetics();
    println!("{} ({} rules, sha256 {}...)", strict.name(), strict.rules().len(), &strict.fingerprint()[..12]);
    println!("{:>8} {:>10} {:>9} {:>9}", "harmony", "popularity", "default", "strict");
    for (h, p) in [(1.0, 20.0), (2.0, 60.0), (3.0, 37.0), (4.0, 80.0), (6.0, 90.0)] {
        let q = [("Color Harmony", h), ("Font Popularity", p)];
        println!("{h:>8} {p:>10} {:>9.2} {:>9.2}", default.infer(q)?.crisp, strict.infer(q)?.crisp);
    }
    // The file form round-trips, so a rule base can be written back out.
    let text = RuleBaseFile::from_rule_base(&strict).to_toml();
    assert_eq!(RuleBase::from_toml(&text)?, strict);
    Ok(())
}
