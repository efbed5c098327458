use std::collections::BTreeMap;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const DEFAULT_UNKNOWN_FONT_SCORE: f64 = 5.0;
pub const BUNDLED_FONTS_TSV: &str = include_str!("../../data/fonts.tsv");

/// First family of a CSS font stack, unquoted, trimmed and lowercased.
pub fn normalize_font_name(raw: &str) -> Result<String> {
    let first = raw.split(',').next().unwrap_or_default();
    let name = first.trim().trim_matches(|c| c == '"' || c == '\'').trim().to_lowercase();
    if name.is_empty() {
        return Err(Error::EmptyFontName(raw.to_owned()));
    }
    Ok(name)
}

/// Font-family popularity index on `[0, 100]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FontPopularityTable {
    entries: BTreeMap<String, f64>,
    default_score: f64,
}

impl Default for FontPopularityTable {
    fn default() -> Self {
        Self::bundled()
    }
}

fn check_score(score: f64, what: &str) -> Result<f64> {
    if (0.0..=100.0).contains(&score) {
        Ok(score)
    } else {
        Err(Error::Config(format!("{what}: popularity {score} outside [0, 100]")))
    }
}

impl FontPopularityTable {
    pub fn new(default_score: f64) -> Result<Self> {
        Ok(Self { entries: BTreeMap::new(), default_score: check_score(default_score, "default")? })
    }

    /// The snapshot shipped in `data/fonts.tsv`.
    pub fn bundled() -> Self {
        Self::parse_tsv(BUNDLED_FONTS_TSV, DEFAULT_UNKNOWN_FONT_SCORE).expect("bundled font table is valid")
    }

    pub fn insert(&mut self, name: &str, score: f64) -> Result<()> {
        let key = normalize_font_name(name)?;
        let score = check_score(score, &key)?;
        self.entries.insert(key, score);
        Ok(())
    }

    pub fn with_default_score(mut self, score: f64) -> Result<Self> {
        self.default_score = check_score(score, "default")?;
        Ok(self)
    }

    /// `name<TAB>score` lines; blank lines and `#` comments are ignored.
    pub fn parse_tsv(text: &str, default_score: f64) -> Result<Self> {
        let mut table = Self::new(default_score)?;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::Config(format!("font table line {}: {msg}", i + 1));
            let (name, score) = line.split_once('\t').ok_or_else(|| bad("expected `name<TAB>score`"))?;
            let score: f64 = score.trim().parse().map_err(|_| bad(&format!("bad score {:?}", score.trim())))?;
            table.insert(name, score).map_err(|e| bad(&e.to_string()))?;
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>, default_score: f64) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse_tsv(&text, default_score).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn default_score(&self) -> f64 {
        self.default_score
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, normalized: &str) -> Option<f64> {
        self.entries.get(normalized).copied()
    }

    /// Popularity of the first family in `raw`, or the default score.
    pub fn lookup(&self, raw: &str) -> Result<f64> {
        Ok(self.get(&normalize_font_name(raw)?).unwrap_or(self.default_score))
    }

    /// SHA-256 over the sorted entries and the default score.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        for (name, score) in &self.entries {
            h.update(format!("{name}\t{score}\n"));
        }
        h.update(format!("*\t{}\n", self.default_score));
        hex::encode(h.finalize())
    }
}

pub fn lookup_popularity(table: &FontPopularityTable, raw: &str) -> Result<f64> {
    table.lookup(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_names() {
        assert_eq!(normalize_font_name("Roboto").unwrap(), "roboto");
        assert_eq!(normalize_font_name("\"Helvetica Neue\", Arial, sans-serif").unwrap(), "helvetica neue");
        assert_eq!(normalize_font_name("  SF Pro Text ").unwrap(), "sf pro text");
        assert_eq!(normalize_font_name("'Open Sans'").unwrap(), "open sans");
    }

    #[test]
    fn empty_names_fail() {
        for raw in ["", "   ", "\"\"", ", Arial"] {
            assert!(matches!(normalize_font_name(raw), Err(Error::EmptyFontName(_))), "{raw:?}");
        }
    }

    #[test]
    fn lookups() {
        let mut t = FontPopularityTable::new(5.0).unwrap();
        t.insert("roboto", 37.0).unwrap();
        assert_eq!(t.lookup("Roboto").unwrap(), 37.0);
        assert_eq!(t.lookup("Roboto, Arial").unwrap(), 37.0);
        assert_eq!(t.lookup("Unheard Of Sans").unwrap(), 5.0);
        assert!(t.lookup(" ").is_err());
    }

    #[test]
    fn parses_tsv() {
        let t = FontPopularityTable::parse_tsv("# c\n\nRoboto\t37\n\"Open Sans\"\t 12.5\n", 5.0).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get("open sans"), Some(12.5));
    }

    #[test]
    fn rejects_bad_tsv() {
        assert!(FontPopularityTable::parse_tsv("Roboto 37\n", 5.0).is_err());
        assert!(FontPopularityTable::parse_tsv("Roboto\tabc\n", 5.0).is_err());
        assert!(FontPopularityTable::parse_tsv("Roboto\t101\n", 5.0).is_err());
        assert!(FontPopularityTable::new(-1.0).is_err());
    }

    #[test]
    fn bundled_table_has_roboto() {
        let t = FontPopularityTable::bundled();
        assert_eq!(t.lookup("Roboto").unwrap(), 37.0);
        assert!(t.len() > 10);
    }
}
