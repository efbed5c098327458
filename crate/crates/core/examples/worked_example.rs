//! Mamdani inference for a harmony count of 3 and a font popularity of 37.
//!
//! cargo run --example worked_example -- [HARMONY] [POPULARITY]

use palette_fis::fuzzy::RuleBase;

fn main() -> palette_fis::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<f64>().expect("numeric argument"));
    let harmony = args.next().unwrap_or(3.0);
    let popularity = args.next().unwrap_or(37.0);

    let rb = RuleBase::default_aesthetics();
    let result = rb.infer([("Color Harmony", harmony), ("Font Popularity", popularity)])?;

    for (var, degrees) in rb.inputs().iter().zip(&result.memberships) {
        let terms: Vec<String> = var.terms().iter().zip(degrees).map(|((n, _), d)| format!("{n}={d:.2}")).collect();
        println!("{:<16} {}", var.name(), terms.join("  "));
    }
    for (rule, strength) in rb.rules().iter().zip(&result.strengths) {
        if *strength > 0.0 {
            println!("  {strength:.2}  {rule}");
        }
    }
    println!("Visual Aesthetics = {:.2}", result.crisp);
    Ok(())
}
