//! Color-wheel harmony classification.
//!
//! Palette colors are placed on the 12-segment wheel and the set of occupied
//! segments is tested against rotational templates. A palette's harmony count
//! is the number of distinct templates matched by the whole segment set or by
//! any of its subsets with at least two segments.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::color::{wheel_position, SEGMENTS};
use crate::error::{Error, Result};
use crate::palette::Palette;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HarmonyTemplate {
    Monochromatic,
    Analogous,
    Complementary,
    #[serde(rename = "Split Complementary")]
    SplitComplementary,
    Triad,
    Square,
    Rectangular,
    Other,
}

impl HarmonyTemplate {
    /// Every matchable template (excludes `Other`).
    pub const ALL: [HarmonyTemplate; 7] = [
        HarmonyTemplate::Monochromatic,
        HarmonyTemplate::Analogous,
        HarmonyTemplate::Complementary,
        HarmonyTemplate::SplitComplementary,
        HarmonyTemplate::Triad,
        HarmonyTemplate::Square,
        HarmonyTemplate::Rectangular,
    ];

    /// Most constrained first; decides the primary label.
    pub const PRIORITY: [HarmonyTemplate; 7] = [
        HarmonyTemplate::Square,
        HarmonyTemplate::Rectangular,
        HarmonyTemplate::Triad,
        HarmonyTemplate::SplitComplementary,
        HarmonyTemplate::Complementary,
        HarmonyTemplate::Analogous,
        HarmonyTemplate::Monochromatic,
    ];

    pub fn label(self) -> &'static str {
        match self {
            HarmonyTemplate::Monochromatic => "Monochromatic",
            HarmonyTemplate::Analogous => "Analogous",
            HarmonyTemplate::Complementary => "Complementary",
            HarmonyTemplate::SplitComplementary => "Split Complementary",
            HarmonyTemplate::Triad => "Triad",
            HarmonyTemplate::Square => "Square",
            HarmonyTemplate::Rectangular => "Rectangular",
            HarmonyTemplate::Other => "Other",
        }
    }

    fn rank(self) -> usize {
        Self::PRIORITY.iter().position(|&t| t == self).unwrap_or(Self::PRIORITY.len())
    }
}

impl fmt::Display for HarmonyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for HarmonyTemplate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .chain([HarmonyTemplate::Other])
            .find(|t| t.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidInput(format!("unknown harmony label {s:?}")))
    }
}

/// A set of wheel segments stored as a 12-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SegmentSet(u16);

impl SegmentSet {
    const FULL: u16 = (1 << SEGMENTS) - 1;

    pub fn from_bits(bits: u16) -> Self {
        Self(bits & Self::FULL)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn insert(&mut self, segment: u8) {
        self.0 |= 1 << (segment % SEGMENTS);
    }

    pub fn contains(self, segment: u8) -> bool {
        self.0 & (1 << (segment % SEGMENTS)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..SEGMENTS).filter(move |&s| self.contains(s))
    }

    pub fn rotate(self, offset: u8) -> Self {
        self.iter().map(|s| (s + offset % SEGMENTS) % SEGMENTS).collect()
    }

    pub fn mirror(self) -> Self {
        self.iter().map(|s| (SEGMENTS - s) % SEGMENTS).collect()
    }

    /// Every non-empty subset, including the set itself.
    pub fn subsets(self) -> impl Iterator<Item = SegmentSet> {
        let full = self.0;
        let mut sub = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                return None;
            }
            sub = (sub - 1) & full;
            done = sub == 0;
            Some(SegmentSet(cur))
        })
    }

    /// Circular distances between consecutive occupied segments.
    fn gaps(self) -> Vec<u8> {
        let segs: Vec<u8> = self.iter().collect();
        let n = segs.len();
        (0..n)
            .map(|i| {
                let next = segs[(i + 1) % n];
                (next + SEGMENTS - segs[i]) % SEGMENTS
            })
            .map(|g| if g == 0 { SEGMENTS } else { g })
            .collect()
    }
}

impl FromIterator<u8> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut set = SegmentSet::default();
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl Serialize for SegmentSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for SegmentSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(deserializer)?;
        if let Some(bad) = v.iter().find(|&&s| s >= SEGMENTS) {
            return Err(serde::de::Error::custom(format!("segment {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Occupied chromatic segments and the number of achromatic entries.
pub fn segment_set(palette: &Palette, sat_min: f64, val_min: f64) -> (SegmentSet, usize) {
    let mut set = SegmentSet::default();
    let mut achromatic = 0;
    for c in palette.colors() {
        match wheel_position(c.to_hsv(), sat_min, val_min).segment() {
            Some(s) => set.insert(s),
            None => achromatic += 1,
        }
    }
    (set, achromatic)
}

/// Whether `segments`, taken as a whole, instantiates `template`.
///
/// Works on the circular gaps between sorted segments: a pattern fits some
/// rotation exactly when its gap sequence matches up to cyclic shift.
pub fn match_template(segments: SegmentSet, template: HarmonyTemplate) -> bool {
    let n = segments.len();
    let gaps = segments.gaps();
    match template {
        HarmonyTemplate::Monochromatic => n == 1,
        // all gaps are 1 except the closing one
        HarmonyTemplate::Analogous => (n == 2 || n == 3) && gaps.iter().filter(|&&g| g == 1).count() == n - 1,
        HarmonyTemplate::Complementary => n == 2 && gaps[0] == 6,
        HarmonyTemplate::SplitComplementary => {
            let mut sorted = gaps.clone();
            sorted.sort_unstable();
            n == 3 && sorted == [2, 5, 5]
        }
        HarmonyTemplate::Triad => n == 3 && gaps.iter().all(|&g| g == 4),
        HarmonyTemplate::Square => n == 4 && gaps.iter().all(|&g| g == 3),
        HarmonyTemplate::Rectangular => n == 4 && gaps[0] == gaps[2] && gaps[1] == gaps[3] && gaps[0].min(gaps[1]) <= 2,
        HarmonyTemplate::Other => false,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonyAnalysis {
    pub segments: SegmentSet,
    pub achromatic_count: usize,
    /// Matched templates in priority order.
    pub matched: Vec<HarmonyTemplate>,
    pub count: usize,
    pub primary: HarmonyTemplate,
}

/// Templates matched by a segment set or any subset of two or more segments.
pub fn matched_templates(segments: SegmentSet) -> Vec<HarmonyTemplate> {
    let mut matched: Vec<HarmonyTemplate> = Vec::new();
    let candidates = segments.subsets().filter(|s| s.len() >= 2 || *s == segments);
    for sub in candidates {
        for t in HarmonyTemplate::ALL {
            if !matched.contains(&t) && match_template(sub, t) {
                matched.push(t);
            }
        }
    }
    matched.sort_by_key(|t| t.rank());
    matched
}

pub fn analyze_segments(segments: SegmentSet, achromatic_count: usize) -> HarmonyAnalysis {
    let matched = if segments.is_empty() { vec![HarmonyTemplate::Monochromatic] } else { matched_templates(segments) };
    let primary = matched.first().copied().unwrap_or(HarmonyTemplate::Other);
    HarmonyAnalysis { segments, achromatic_count, count: matched.len(), matched, primary }
}

pub fn analyze_harmony(palette: &Palette, sat_min: f64, val_min: f64) -> HarmonyAnalysis {
    let (segments, achromatic) = segment_set(palette, sat_min, val_min);
    analyze_segments(segments, achromatic)
}
