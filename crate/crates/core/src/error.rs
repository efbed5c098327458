use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hex color {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },

    #[error("cannot choose {requested} initial centroids from {distinct} distinct points")]
    InsufficientPoints { requested: usize, distinct: usize },

    #[error("image has no opaque pixels")]
    EmptyImage,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: cannot decode image: {source}")]
    Decode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no rule fired; the aggregated output set is empty")]
    NoRuleFired,

    #[error("rule base: {0}")]
    RuleBase(String),

    #[error("font name {0:?} is empty after normalization")]
    EmptyFontName(String),

    #[error("dataset schema: {0}")]
    Schema(String),

    #[error("line {line}: {message}")]
    Row { line: u64, message: String },

    #[error("configuration: {0}")]
    Config(String),
}

impl Error {
    /// Errors caused by bad settings rather than bad input data.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::RuleBase(_) | Error::Config(_))
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
