//! Full pipeline on one screenshot: palette, harmony, font lookup, score.
//!
//! cargo run --example score_screenshot -- [IMAGE] [FONT]

use palette_fis::clustering::KMeansConfig;
use palette_fis::color::RgbColor;
use palette_fis::palette::{load_image, PixelImage};
use palette_fis::pipeline::{score_website, ScoringConfig};

fn main() -> palette_fis::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut config = ScoringConfig::default();
    let image = match args.next() {
        Some(path) => load_image(path)?,
        None => {
            // Four hues forming a rectangle on the wheel.
            let bands = [(255, 0, 0, 8), (255, 128, 0, 6), (0, 255, 255, 4), (0, 64, 255, 2)];
            let px: Vec<RgbColor> = bands
                .iter()
                .flat_map(|&(r, g, b, rows)| std::iter::repeat_n(RgbColor::new(r, g, b), rows * 20))
                .collect();
            config.kmeans = KMeansConfig { k: 4, ..Default::default() };
            PixelImage::from_rgb(20, 20, &px)?
        }
    };
    let font = args.next().unwrap_or_else(|| "Roboto, Arial, sans-serif".to_owned());
    let report = score_website(&image, &font, &config)?;
    println!("{}", report.to_json());
    Ok(())
}
