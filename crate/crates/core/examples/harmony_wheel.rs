//! Classifies a few palettes on the 12-segment color wheel.
//!
//! cargo run --example harmony_wheel -- [#hex ...]

use palette_fis::color::{parse_hex, wheel_position, DEFAULT_SAT_MIN, DEFAULT_VAL_MIN};
use palette_fis::harmony::analyze_harmony;
use palette_fis::palette::Palette;

fn show(colors: &[&str]) -> palette_fis::Result<()> {
    let parsed = colors.iter().map(|c| parse_hex(c)).collect::<palette_fis::Result<Vec<_>>>()?;
    let palette = Palette::uniform(&parsed)?;
    let analysis = analyze_harmony(&palette, DEFAULT_SAT_MIN, DEFAULT_VAL_MIN);
    let positions: Vec<String> = parsed
        .iter()
        .map(|c| match wheel_position(c.to_hsv(), DEFAULT_SAT_MIN, DEFAULT_VAL_MIN).segment() {
            Some(s) => format!("{c}@{s}"),
            None => format!("{c}@gray"),
        })
        .collect();
    let matched: Vec<&str> = analysis.matched.iter().map(|t| t.label()).collect();
    println!(
        "{:<48} count {}  primary {:<20} matched [{}]",
        positions.join(" "),
        analysis.count,
        analysis.primary,
        matched.join(", ")
    );
    Ok(())
}

fn main() -> palette_fis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        return show(&args.iter().map(String::as_str).collect::<Vec<_>>());
    }
    show(&["#101010", "#505051", "#a0a0a0"])?;
    show(&["#ff0000", "#ff4000"])?;
    show(&["#ff0000", "#00ffff"])?;
    show(&["#ff0000", "#00ff00", "#0000ff"])?;
    show(&["#ff0000", "#00ff80", "#0080ff"])?;
    show(&["#ff0000", "#ff8000", "#00ffff", "#0040ff"])?;
    show(&["#ff0000", "#60ff00", "#00ffff", "#8000ff"])?;
    Ok(())
}
