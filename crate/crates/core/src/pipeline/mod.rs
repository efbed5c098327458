//! End-to-end scoring: palette, harmony, font popularity, fuzzy inference.

mod dataset;
mod distribution;
mod fonts;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use dataset::{bundled_sample, ingest_dataset, Dataset, DatasetRow, WebsiteRecord, BUNDLED_SAMPLE_CSV, COLUMNS};
pub use distribution::{harmony_distribution, Distribution, DistributionGroup, LabelShare, ALL_GROUP};
pub use fonts::{
    lookup_popularity, normalize_font_name, FontPopularityTable, BUNDLED_FONTS_TSV, DEFAULT_UNKNOWN_FONT_SCORE,
};

use crate::clustering::{InitMethod, KMeansConfig};
use crate::color::{DEFAULT_SAT_MIN, DEFAULT_VAL_MIN};
use crate::error::{Error, Result};
use crate::fuzzy::{InferenceResult, RuleBase};
use crate::harmony::{analyze_harmony, HarmonyAnalysis};
use crate::palette::{extract_palette, Palette, PixelImage, DEFAULT_MAX_SAMPLES};

pub const HARMONY_INPUT: &str = "Color Harmony";
pub const POPULARITY_INPUT: &str = "Font Popularity";
pub const REPORT_SCHEMA: u32 = 1;

/// Everything a scoring run depends on.
#[derive(Debug, Clone)]
pub struct ScoringConfig {
    pub kmeans: KMeansConfig,
    pub max_samples: usize,
    pub sat_min: f64,
    pub val_min: f64,
    pub rules: Arc<RuleBase>,
    pub fonts: Arc<FontPopularityTable>,
}

impl Default for ScoringConfig {
    fn default() -> Self {
        Self {
            kmeans: KMeansConfig::default(),
            max_samples: DEFAULT_MAX_SAMPLES,
            sat_min: DEFAULT_SAT_MIN,
            val_min: DEFAULT_VAL_MIN,
            rules: Arc::new(RuleBase::default_aesthetics()),
            fonts: Arc::new(FontPopularityTable::bundled()),
        }
    }
}

impl ScoringConfig {
    pub fn validate(&self) -> Result<()> {
        self.kmeans.validate()?;
        if self.max_samples == 0 {
            return Err(Error::Config("max_samples must be at least 1".into()));
        }
        for (name, v) in [("sat_min", self.sat_min), ("val_min", self.val_min)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Config(format!("{name} must lie in [0, 1], got {v}")));
            }
        }
        for input in [HARMONY_INPUT, POPULARITY_INPUT] {
            if self.rules.input(input).is_none() {
                return Err(Error::Config(format!("rule base {:?} lacks input {input:?}", self.rules.name())));
            }
        }
        if self.rules.inputs().len() != 2 {
            return Err(Error::Config(format!(
                "rule base {:?} must declare exactly the inputs {HARMONY_INPUT:?} and {POPULARITY_INPUT:?}",
                self.rules.name()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PaletteSource {
    /// Clustered from image pixels.
    Image,
    /// Taken verbatim from a dataset record.
    Record,
}

/// Settings and data identities needed to reproduce a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: PaletteSource,
    pub seed: u64,
    pub k: usize,
    pub max_iterations: usize,
    pub tolerance: f64,
    pub init: InitMethod,
    pub max_samples: usize,
    pub sat_min: f64,
    pub val_min: f64,
    pub rule_base: String,
    pub rule_base_sha256: String,
    pub defuzz_samples: usize,
    pub font_table_sha256: String,
    pub crate_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleFiring {
    /// 1-based position in the rule base.
    pub rule: usize,
    pub text: String,
    pub strength: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AestheticsReport {
    pub schema: u32,
    pub palette: Palette,
    pub harmony: HarmonyAnalysis,
    pub font_family: String,
    pub font_popularity: f64,
    pub rule_firings: Vec<RuleFiring>,
    pub score: f64,
    pub provenance: Provenance,
    #[serde(skip)]
    pub inference: Option<InferenceResult>,
}

impl AestheticsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs harmony analysis, font lookup and inference on a given palette.
pub fn score_palette(
    palette: Palette,
    font_raw: &str,
    config: &ScoringConfig,
    source: PaletteSource,
) -> Result<AestheticsReport> {
    config.validate()?;
    let harmony = analyze_harmony(&palette, config.sat_min, config.val_min);
    let font_family = normalize_font_name(font_raw)?;
    let font_popularity = config.fonts.lookup(font_raw)?;
    let inference = config.rules.infer([(HARMONY_INPUT, harmony.count as f64), (POPULARITY_INPUT, font_popularity)])?;
    let rule_firings = config
        .rules
        .rules()
        .iter()
        .zip(&inference.strengths)
        .enumerate()
        .map(|(i, (rule, &strength))| RuleFiring { rule: i + 1, text: rule.to_string(), strength })
        .collect();
    let provenance = Provenance {
        source,
        seed: config.kmeans.seed,
        k: config.kmeans.k,
        max_iterations: config.kmeans.max_iterations,
        tolerance: config.kmeans.tolerance,
        init: config.kmeans.init,
        max_samples: config.max_samples,
        sat_min: config.sat_min,
        val_min: config.val_min,
        rule_base: config.rules.name().to_owned(),
        rule_base_sha256: config.rules.fingerprint(),
        defuzz_samples: config.rules.samples(),
        font_table_sha256: config.fonts.fingerprint(),
        crate_version: env!("CARGO_PKG_VERSION").to_owned(),
    };
    Ok(AestheticsReport {
        schema: REPORT_SCHEMA,
        palette,
        harmony,
        font_family,
        font_popularity,
        rule_firings,
        score: inference.crisp,
        provenance,
        inference: Some(inference),
    })
}

/// Scores a screenshot together with the site's font family.
pub fn score_website(image: &PixelImage, font_raw: &str, config: &ScoringConfig) -> Result<AestheticsReport> {
    config.validate()?;
    let palette = extract_palette(image, config.max_samples, &config.kmeans)?;
    score_palette(palette, font_raw, config, PaletteSource::Image)
}

/// Scores a dataset record using its three stored colors at equal weight.
pub fn score_record(record: &WebsiteRecord, config: &ScoringConfig) -> Result<AestheticsReport> {
    let palette = Palette::uniform(&record.colors)?;
    score_palette(palette, &record.font_family, config, PaletteSource::Record)
}
