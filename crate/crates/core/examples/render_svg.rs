//! Writes palette and inference charts as SVG.
//!
//! cargo run --example render_svg -- [OUT_DIR]

use palette_fis::color::parse_hex;
use palette_fis::fuzzy::RuleBase;
use palette_fis::palette::{Palette, PaletteEntry};
use palette_fis::svg::{inference_svg, palette_svg};

fn main() -> palette_fis::Result<()> {
    let dir = std::path::PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "svg-out".to_owned()));
    std::fs::create_dir_all(&dir).map_err(|e| palette_fis::Error::InvalidInput(e.to_string()))?;

    let palette = Palette::from_entries(vec![
        PaletteEntry::new(parse_hex("#fdd626")?, 0.55),
        PaletteEntry::new(parse_hex("#1a1f27")?, 0.30),
        PaletteEntry::new(parse_hex("#ffffff")?, 0.15),
    ])?;
    let rb = RuleBase::default_aesthetics();
    let result = rb.infer([("Color Harmony", 3.0), ("Font Popularity", 37.0)])?;

    for (name, svg) in [("palette.svg", palette_svg(&palette)), ("inference.svg", inference_svg(&rb, &result))] {
        let path = dir.join(name);
        std::fs::write(&path, svg).map_err(|e| palette_fis::Error::InvalidInput(e.to_string()))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
