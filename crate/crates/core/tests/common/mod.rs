#![allow(dead_code)]

use std::path::{Path, PathBuf};

use palette_fis::color::RgbColor;
use palette_fis::palette::PixelImage;

/// splitmix64, for generating test data independently of the library RNG.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Horizontal bands, one per color, with heights proportional to `rows`.
pub fn banded_image(width: u32, bands: &[(RgbColor, u32)]) -> PixelImage {
    let mut px = Vec::new();
    let mut height = 0;
    for &(c, rows) in bands {
        px.extend(std::iter::repeat_n(c, (width * rows) as usize));
        height += rows;
    }
    PixelImage::from_rgb(width, height, &px).unwrap()
}

pub fn save_png(img: &PixelImage, path: &Path) {
    let raw: Vec<u8> = img.pixels().iter().flatten().copied().collect();
    image::RgbaImage::from_raw(img.width(), img.height(), raw).unwrap().save(path).unwrap();
}

/// Four hues on wheel segments 0, 1, 6 and 7.
pub fn four_hue_colors() -> [RgbColor; 4] {
    [RgbColor::new(255, 0, 0), RgbColor::new(255, 128, 0), RgbColor::new(0, 255, 255), RgbColor::new(0, 64, 255)]
}

pub fn four_hue_image() -> PixelImage {
    let [a, b, c, d] = four_hue_colors();
    banded_image(20, &[(a, 8), (b, 6), (c, 4), (d, 2)])
}

pub fn data_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
