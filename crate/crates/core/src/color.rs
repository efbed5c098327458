//! Color value types, hex parsing, RGB to HSV conversion and placement of
//! hues on a 12-segment color wheel.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of equal hue arcs on the wheel.
pub const SEGMENTS: u8 = 12;
/// Angular width of one wheel segment, in degrees.
pub const SEGMENT_DEGREES: f64 = 30.0;

pub const DEFAULT_SAT_MIN: f64 = 0.10;
pub const DEFAULT_VAL_MIN: f64 = 0.10;

/// An 8-bit sRGB color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RgbColor {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl RgbColor {
    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        Self { r, g, b }
    }

    /// Lowercase `#rrggbb`.
    pub fn to_hex(self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.r, self.g, self.b)
    }

    pub fn to_hsv(self) -> HsvColor {
        rgb_to_hsv(self)
    }
}

impl fmt::Display for RgbColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for RgbColor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hex(s)
    }
}

impl Serialize for RgbColor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for RgbColor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses `#RRGGBB` (case-insensitive, leading `#` optional).
pub fn parse_hex(text: &str) -> Result<RgbColor> {
    let err = |reason| Error::Parse { input: text.to_owned(), reason };
    let digits = text.strip_prefix('#').unwrap_or(text);
    if digits.len() != 6 {
        return Err(err("expected six hex digits"));
    }
    if !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(err("non-hex digit"));
    }
    let channel = |i: usize| u8::from_str_radix(&digits[i..i + 2], 16).map_err(|_| err("non-hex digit"));
    Ok(RgbColor::new(channel(0)?, channel(2)?, channel(4)?))
}

/// Hue in degrees `[0, 360)`, saturation and value in `[0, 1]`.
///
/// Achromatic colors carry `h = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HsvColor {
    pub h: f64,
    pub s: f64,
    pub v: f64,
}

impl HsvColor {
    /// Builds a color, wrapping the hue into `[0, 360)` and clamping `s`, `v`.
    pub fn new(h: f64, s: f64, v: f64) -> Self {
        let s = s.clamp(0.0, 1.0);
        let mut h = h.rem_euclid(360.0);
        if h >= 360.0 || s == 0.0 {
            h = 0.0;
        }
        Self { h, s, v: v.clamp(0.0, 1.0) }
    }

    pub fn rotate(self, degrees: f64) -> Self {
        Self::new(self.h + degrees, self.s, self.v)
    }
}

pub fn rgb_to_hsv(c: RgbColor) -> HsvColor {
    let (r, g, b) = (i32::from(c.r), i32::from(c.g), i32::from(c.b));
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = max - min;
    let v = f64::from(max) / 255.0;
    if delta == 0 {
        return HsvColor { h: 0.0, s: 0.0, v };
    }
    let s = f64::from(delta) / f64::from(max);
    // Numerators stay integral so exact multiples of 30 degrees are exact.
    let numerator = if max == r {
        60 * (g - b)
    } else if max == g {
        120 * delta + 60 * (b - r)
    } else {
        240 * delta + 60 * (r - g)
    };
    let mut h = f64::from(numerator) / f64::from(delta);
    if h < 0.0 {
        h += 360.0;
    }
    if h >= 360.0 {
        h -= 360.0;
    }
    HsvColor { h, s, v }
}

/// Inverse conversion, rounding to the nearest 8-bit channel value.
pub fn hsv_to_rgb(c: HsvColor) -> RgbColor {
    let h = c.h.rem_euclid(360.0) / 60.0;
    let chroma = c.v * c.s;
    let x = chroma * (1.0 - (h % 2.0 - 1.0).abs());
    let (r, g, b) = match h as u32 {
        0 => (chroma, x, 0.0),
        1 => (x, chroma, 0.0),
        2 => (0.0, chroma, x),
        3 => (0.0, x, chroma),
        4 => (x, 0.0, chroma),
        _ => (chroma, 0.0, x),
    };
    let m = c.v - chroma;
    let q = |u: f64| ((u + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    RgbColor::new(q(r), q(g), q(b))
}

/// Where a color falls on the 12-segment wheel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WheelPosition {
    Chromatic(u8),
    Achromatic,
}

impl WheelPosition {
    pub fn segment(self) -> Option<u8> {
        match self {
            WheelPosition::Chromatic(s) => Some(s),
            WheelPosition::Achromatic => None,
        }
    }
}

/// Segments are half-open arcs `[30i, 30(i+1))`. Colors whose saturation or
/// value falls below the thresholds have no meaningful hue.
pub fn wheel_position(c: HsvColor, sat_min: f64, val_min: f64) -> WheelPosition {
    if c.s < sat_min || c.v < val_min {
        return WheelPosition::Achromatic;
    }
    let seg = (c.h.rem_euclid(360.0) / SEGMENT_DEGREES).floor() as i64;
    WheelPosition::Chromatic(seg.rem_euclid(i64::from(SEGMENTS)) as u8)
}
