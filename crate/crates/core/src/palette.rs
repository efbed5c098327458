//! Image ingestion, deterministic pixel sampling and dominant-color
//! extraction.

use std::cmp::Ordering;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::clustering::{distinct_points, run_kmeans, KMeansConfig, Point3};
use crate::color::RgbColor;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_SAMPLES: usize = 100_000;

/// Row-major RGBA pixels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelImage {
    width: u32,
    height: u32,
    pixels: Vec<[u8; 4]>,
}

impl PixelImage {
    pub fn from_rgba(width: u32, height: u32, pixels: Vec<[u8; 4]>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidInput(format!("image dimensions must be positive, got {width}x{height}")));
        }
        if pixels.len() as u64 != u64::from(width) * u64::from(height) {
            return Err(Error::InvalidInput(format!(
                "expected {} pixels for {width}x{height}, got {}",
                u64::from(width) * u64::from(height),
                pixels.len()
            )));
        }
        Ok(Self { width, height, pixels })
    }

    pub fn from_rgb(width: u32, height: u32, pixels: &[RgbColor]) -> Result<Self> {
        Self::from_rgba(width, height, pixels.iter().map(|c| [c.r, c.g, c.b, 255]).collect())
    }

    /// An image filled with a single opaque color.
    pub fn solid(width: u32, height: u32, color: RgbColor) -> Result<Self> {
        Self::from_rgb(width, height, &vec![color; width as usize * height as usize])
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[[u8; 4]] {
        &self.pixels
    }

    pub fn pixel(&self, x: u32, y: u32) -> [u8; 4] {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    /// Nearest-neighbor downscale by an integer factor (top-left of each block).
    pub fn downscale_nearest(&self, factor: u32) -> Result<Self> {
        if factor == 0 {
            return Err(Error::InvalidInput("scale factor must be positive".into()));
        }
        let (w, h) = (self.width.div_ceil(factor), self.height.div_ceil(factor));
        let pixels =
            (0..h).flat_map(|y| (0..w).map(move |x| (x, y))).map(|(x, y)| self.pixel(x * factor, y * factor)).collect();
        Self::from_rgba(w, h, pixels)
    }
}

/// Decodes a PNG or JPEG file.
pub fn load_image(path: impl AsRef<Path>) -> Result<PixelImage> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let decoded = image::load_from_memory(&bytes).map_err(|source| Error::Decode { path: path.to_owned(), source })?;
    let rgba = decoded.into_rgba8();
    let (width, height) = rgba.dimensions();
    let pixels = rgba.pixels().map(|p| p.0).collect();
    PixelImage::from_rgba(width, height, pixels)
}

fn composite_over_white([r, g, b, a]: [u8; 4]) -> Point3 {
    if a == 255 {
        return Point3::new(f64::from(r), f64::from(g), f64::from(b));
    }
    let alpha = f64::from(a) / 255.0;
    let blend = |c: u8| f64::from(c) * alpha + 255.0 * (1.0 - alpha);
    Point3::new(blend(r), blend(g), blend(b))
}

/// Converts pixels to color points.
///
/// Fully transparent pixels are dropped and partially transparent ones are
/// composited over white. When more than `max_samples` pixels remain, the
/// `i`-th sample is the remaining pixel at rank `floor(i * n / max_samples)`.
pub fn sample_pixels(image: &PixelImage, max_samples: usize) -> Vec<Point3> {
    let max_samples = max_samples.max(1);
    let opaque = || image.pixels.iter().filter(|p| p[3] != 0);
    let n = opaque().count();
    if n <= max_samples {
        return opaque().map(|&p| composite_over_white(p)).collect();
    }
    let mut out = Vec::with_capacity(max_samples);
    let mut next = 0usize;
    for (rank, &p) in opaque().enumerate() {
        if out.len() == max_samples {
            break;
        }
        let target = (next as u128 * n as u128 / max_samples as u128) as usize;
        if rank == target {
            out.push(composite_over_white(p));
            next += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaletteEntry {
    pub color: RgbColor,
    /// Fraction of sampled pixels in this cluster.
    pub weight: f64,
    /// Unrounded cluster centroid.
    pub centroid: [f64; 3],
    #[serde(skip)]
    count: usize,
}

impl PaletteEntry {
    pub fn new(color: RgbColor, weight: f64) -> Self {
        let centroid = [f64::from(color.r), f64::from(color.g), f64::from(color.b)];
        Self { color, weight, centroid, count: 0 }
    }
}

/// Dominant colors, heaviest first; equal weights order by `(r, g, b)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Palette {
    entries: Vec<PaletteEntry>,
}

impl Palette {
    /// Builds a palette from entries, normalizing weights to sum to one.
    pub fn from_entries(mut entries: Vec<PaletteEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("palette needs at least one color".into()));
        }
        let total: f64 = entries.iter().map(|e| e.weight).sum();
        let positive = |w: f64| w > 0.0 && w.is_finite();
        if !positive(total) || entries.iter().any(|e| !positive(e.weight)) {
            return Err(Error::InvalidInput("palette weights must be positive".into()));
        }
        for e in &mut entries {
            e.weight /= total;
        }
        entries.sort_by(order);
        Ok(Self { entries })
    }

    /// Equal-weight palette.
    pub fn uniform(colors: &[RgbColor]) -> Result<Self> {
        let w = 1.0 / colors.len().max(1) as f64;
        Self::from_entries(colors.iter().map(|&c| PaletteEntry::new(c, w)).collect())
    }

    pub fn entries(&self) -> &[PaletteEntry] {
        &self.entries
    }

    pub fn colors(&self) -> impl Iterator<Item = RgbColor> + '_ {
        self.entries.iter().map(|e| e.color)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn order(a: &PaletteEntry, b: &PaletteEntry) -> Ordering {
    let by_weight = if a.count != 0 || b.count != 0 { b.count.cmp(&a.count) } else { b.weight.total_cmp(&a.weight) };
    by_weight.then_with(|| a.color.cmp(&b.color))
}

fn round_half_up(c: f64) -> u8 {
    (c + 0.5).floor().clamp(0.0, 255.0) as u8
}

/// Clusters sampled pixel colors and reports each centroid as a palette color.
///
/// When the image holds fewer distinct colors than `config.k`, the palette
/// shrinks to that many entries.
pub fn extract_palette(image: &PixelImage, max_samples: usize, config: &KMeansConfig) -> Result<Palette> {
    config.validate()?;
    let points = sample_pixels(image, max_samples);
    if points.is_empty() {
        return Err(Error::EmptyImage);
    }
    let k = config.k.min(distinct_points(&points).len());
    let result = run_kmeans(&points, &KMeansConfig { k, ..config.clone() })?;
    let total = points.len() as f64;
    let mut entries: Vec<PaletteEntry> = result
        .centroids
        .iter()
        .zip(result.cluster_sizes())
        .filter(|(_, n)| *n > 0)
        .map(|(c, n)| PaletteEntry {
            color: RgbColor::new(round_half_up(c.0[0]), round_half_up(c.0[1]), round_half_up(c.0[2])),
            weight: n as f64 / total,
            centroid: c.0,
            count: n,
        })
        .collect();
    entries.sort_by(order);
    Ok(Palette { entries })
}
