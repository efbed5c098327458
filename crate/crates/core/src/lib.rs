//! Website visual-aesthetics scoring.
//!
//! A screenshot's dominant colors are found with seeded k-means, placed on a
//! 12-segment hue wheel and matched against color-harmony templates. The
//! number of matched templates and the popularity of the site's font feed a
//! Mamdani fuzzy inference system whose centroid is the aesthetics score.
//!
//! ```
//! use palette_fis::fuzzy::RuleBase;
//!
//! let rules = RuleBase::default_aesthetics();
//! let result = rules.infer([("Color Harmony", 3.0), ("Font Popularity", 37.0)]).unwrap();
//! assert!((result.crisp - 57.9).abs() < 3.0);
//! ```
//!
//! See `examples/` for one runnable program per capability.

pub mod cli;
pub mod clustering;
pub mod color;
pub mod error;
pub mod fuzzy;
pub mod harmony;
pub mod palette;
pub mod pipeline;
pub mod rng;
pub mod svg;

pub use error::{Error, Result};
