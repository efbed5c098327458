//! Dominant colors of an image.
//!
//! cargo run --example extract_palette -- [IMAGE] [K]
//!
//! Without arguments a synthetic 70/20/10 image is used.

use palette_fis::clustering::KMeansConfig;
use palette_fis::color::RgbColor;
use palette_fis::palette::{extract_palette, load_image, PixelImage, DEFAULT_MAX_SAMPLES};

fn synthetic() -> PixelImage {
    let bands =
        [(RgbColor::new(245, 245, 240), 70), (RgbColor::new(25, 60, 140), 20), (RgbColor::new(230, 90, 20), 10)];
    let pixels: Vec<RgbColor> = bands.iter().flat_map(|&(c, rows)| std::iter::repeat_n(c, rows * 50)).collect();
    PixelImage::from_rgb(50, 100, &pixels).expect("valid dimensions")
}

fn main() -> palette_fis::Result<()> {
    let mut args = std::env::args().skip(1);
    let image = match args.next() {
        Some(path) => load_image(path)?,
        None => synthetic(),
    };
    let k = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let palette = extract_palette(&image, DEFAULT_MAX_SAMPLES, &KMeansConfig { k, ..Default::default() })?;
    println!("{} x {} image, {} colors", image.width(), image.height(), palette.len());
    for entry in palette.entries() {
        let hsv = entry.color.to_hsv();
        println!("  {}  {:5.1}%  h={:5.1} s={:.2} v={:.2}", entry.color, entry.weight * 100.0, hsv.h, hsv.s, hsv.v);
    }
    Ok(())
}
