//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on input or IO errors, 2 on configuration
//! errors. Settings resolve as built-in defaults, then the TOML file named by
//! `PALETTE_FIS_CONFIG`, then command-line flags.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::clustering::{InitMethod, KMeansConfig};
use crate::color::{DEFAULT_SAT_MIN, DEFAULT_VAL_MIN};
use crate::error::Error;
use crate::fuzzy::RuleBase;
use crate::harmony::HarmonyTemplate;
use crate::palette::{load_image, DEFAULT_MAX_SAMPLES};
use crate::pipeline::{
    harmony_distribution, score_record, score_website, AestheticsReport, Dataset, Distribution, FontPopularityTable,
    ScoringConfig, DEFAULT_UNKNOWN_FONT_SCORE,
};
use crate::svg::{inference_svg, palette_svg};

pub const CONFIG_ENV: &str = "PALETTE_FIS_CONFIG";

/// Columns appended to each dataset row by `batch`.
pub const SCORE_COLUMNS: [&str; 4] = ["Primary Harmony", "Harmony Count", "Font Popularity", "Visual Aesthetics"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "palette-fis", version, about = "Score website visual aesthetics from screenshots and fonts")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct GlobalOptions {
    /// Number of palette colors
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Seed for centroid initialization
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Maximum number of pixels clustered per image
    #[arg(long, global = true)]
    pub max_samples: Option<usize>,
    /// Saturation below which a color is achromatic
    #[arg(long, global = true)]
    pub sat_min: Option<f64>,
    /// Value below which a color is achromatic
    #[arg(long, global = true)]
    pub val_min: Option<f64>,
    /// Rule-base TOML file
    #[arg(long, global = true)]
    pub rules: Option<PathBuf>,
    /// Font popularity table (name<TAB>score)
    #[arg(long, global = true)]
    pub fonts: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one screenshot
    Analyze {
        image: PathBuf,
        /// Font family (first family of a CSS stack is used)
        #[arg(long)]
        font: String,
        /// Write palette.svg and inference.svg here
        #[arg(long)]
        svg_dir: Option<PathBuf>,
    },
    /// Score every row of a dataset CSV
    Batch {
        dataset: PathBuf,
        /// Stop at the first bad row
        #[arg(long)]
        strict: bool,
    },
    /// Harmony distribution of a scored CSV
    Distribution {
        scored: PathBuf,
        #[arg(long)]
        by_category: bool,
    },
}

/// Keys accepted in the `PALETTE_FIS_CONFIG` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub max_samples: Option<usize>,
    pub max_iterations: Option<usize>,
    pub tolerance: Option<f64>,
    pub init: Option<InitMethod>,
    pub sat_min: Option<f64>,
    pub val_min: Option<f64>,
    pub rules: Option<PathBuf>,
    pub fonts: Option<PathBuf>,
    pub unknown_font_score: Option<f64>,
    pub format: Option<OutputFormat>,
}

#[derive(Debug)]
enum Failure {
    Config(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Config(_) => 2,
            Failure::Input(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_config() {
            Failure::Config(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

/// Fully resolved run settings.
struct Settings {
    scoring: ScoringConfig,
    format: Option<OutputFormat>,
}

fn config_err(e: Error) -> Failure {
    Failure::Config(e.to_string())
}

fn resolve(options: &GlobalOptions, config_path: Option<&Path>) -> Result<Settings, Failure> {
    let file = match config_path {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
            toml::from_str::<FileConfig>(&text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?
        }
        None => FileConfig::default(),
    };
    let base = config_path.and_then(Path::parent).unwrap_or(Path::new(""));
    let relative = |p: &PathBuf| if p.is_relative() { base.join(p) } else { p.clone() };

    let defaults = KMeansConfig::default();
    let kmeans = KMeansConfig {
        k: options.k.or(file.k).unwrap_or(defaults.k),
        seed: options.seed.or(file.seed).unwrap_or(defaults.seed),
        max_iterations: file.max_iterations.unwrap_or(defaults.max_iterations),
        tolerance: file.tolerance.unwrap_or(defaults.tolerance),
        init: file.init.unwrap_or(defaults.init),
    };
    let rules = match options.rules.clone().or_else(|| file.rules.as_ref().map(relative)) {
        Some(p) => RuleBase::load(&p).map_err(config_err)?,
        None => RuleBase::default_aesthetics(),
    };
    let unknown = file.unknown_font_score.unwrap_or(DEFAULT_UNKNOWN_FONT_SCORE);
    let fonts = match options.fonts.clone().or_else(|| file.fonts.as_ref().map(relative)) {
        Some(p) => FontPopularityTable::load(&p, unknown).map_err(config_err)?,
        None => FontPopularityTable::bundled().with_default_score(unknown).map_err(config_err)?,
    };
    let scoring = ScoringConfig {
        kmeans,
        max_samples: options.max_samples.or(file.max_samples).unwrap_or(DEFAULT_MAX_SAMPLES),
        sat_min: options.sat_min.or(file.sat_min).unwrap_or(DEFAULT_SAT_MIN),
        val_min: options.val_min.or(file.val_min).unwrap_or(DEFAULT_VAL_MIN),
        rules: Arc::new(rules),
        fonts: Arc::new(fonts),
    };
    scoring.validate().map_err(config_err)?;
    Ok(Settings { scoring, format: options.format.or(file.format) })
}

/// Parses `args` and runs, reading the config path from the environment.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env_config = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    run_with_config(args, env_config.as_deref(), stdout, stderr)
}

/// As [`run`], with the config file path given explicitly.
pub fn run_with_config<I, T>(args: I, config: Option<&Path>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, config, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cli: &Cli, config: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let settings = resolve(&cli.options, config)?;
    match &cli.command {
        Command::Analyze { image, font, svg_dir } => cmd_analyze(&settings, image, font, svg_dir.as_deref(), out),
        Command::Batch { dataset, strict } => cmd_batch(&settings, dataset, *strict, out, err),
        Command::Distribution { scored, by_category } => cmd_distribution(&settings, scored, *by_category, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("write failed: {e}")))
}

fn cmd_analyze(
    settings: &Settings,
    image: &Path,
    font: &str,
    svg_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let pixels = load_image(image)?;
    let report = score_website(&pixels, font, &settings.scoring)?;
    let text = match settings.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => analyze_csv(image, &report)?,
        OutputFormat::Text => analyze_text(&report),
    };
    if let Some(dir) = svg_dir {
        std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        let write = |name: &str, body: String| {
            let path = dir.join(name);
            std::fs::write(&path, body).map_err(|e| io_failure(&path, e))
        };
        write("palette.svg", palette_svg(&report.palette))?;
        if let Some(inference) = &report.inference {
            write("inference.svg", inference_svg(&settings.scoring.rules, inference))?;
        }
    }
    emit(out, &text)?;
    Ok(0)
}

fn palette_hex(report: &AestheticsReport) -> String {
    report.palette.colors().map(|c| c.to_hex()).collect::<Vec<_>>().join(" ")
}

fn analyze_csv(image: &Path, report: &AestheticsReport) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let row = |w: &mut csv::Writer<Vec<u8>>, fields: &[String]| {
        w.write_record(fields).map_err(|e| Failure::Input(e.to_string()))
    };
    row(
        &mut w,
        &[
            "Image",
            "Font-Family",
            "Palette",
            "Primary Harmony",
            "Harmony Count",
            "Font Popularity",
            "Visual Aesthetics",
        ]
        .map(String::from),
    )?;
    row(
        &mut w,
        &[
            image.display().to_string(),
            report.font_family.clone(),
            palette_hex(report),
            report.harmony.primary.to_string(),
            report.harmony.count.to_string(),
            format!("{:.4}", report.font_popularity),
            format!("{:.4}", report.score),
        ],
    )?;
    let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn analyze_text(report: &AestheticsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Palette:");
    for e in report.palette.entries() {
        let _ = writeln!(s, "  {}  {:5.1}%", e.color, e.weight * 100.0);
    }
    let h = &report.harmony;
    let matched: Vec<&str> = h.matched.iter().map(|t| t.label()).collect();
    let segments: Vec<String> = h.segments.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(s, "Wheel segments: [{}] ({} achromatic)", segments.join(", "), h.achromatic_count);
    let _ = writeln!(s, "Harmony: {} (count {}; matched: {})", h.primary, h.count, matched.join(", "));
    let _ = writeln!(s, "Font: {} (popularity {:.1})", report.font_family, report.font_popularity);
    let _ = writeln!(s, "Rules fired:");
    for f in report.rule_firings.iter().filter(|f| f.strength > 0.0) {
        let _ = writeln!(s, "  {:>2}  {:.3}  {}", f.rule, f.strength, f.text);
    }
    let _ = writeln!(s, "Visual Aesthetics: {:.2}", report.score);
    s
}

fn cmd_batch(
    settings: &Settings,
    path: &Path,
    strict: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let dataset = Dataset::open(path)?;
    let scored: Vec<Result<AestheticsReport, Error>> = dataset
        .rows
        .par_iter()
        .map(|row| match &row.record {
            Ok(rec) => {
                score_record(rec, &settings.scoring).map_err(|e| Error::Row { line: row.line, message: e.to_string() })
            }
            Err(e) => Err(Error::Row { line: row.line, message: row_message(e) }),
        })
        .collect();

    let mut diagnostics = Vec::new();
    for result in &scored {
        if let Err(e) = result {
            if strict {
                return Err(Failure::Input(format!("{}: {e}", path.display())));
            }
            diagnostics.push(format!("{}: {e}", path.display()));
        }
    }

    let format = settings.format.unwrap_or(OutputFormat::Csv);
    let text = match format {
        OutputFormat::Json => {
            let reports: Vec<serde_json::Value> = dataset
                .rows
                .iter()
                .zip(&scored)
                .filter_map(|(row, r)| {
                    let (rec, rep) = (row.record.as_ref().ok()?, r.as_ref().ok()?);
                    Some(serde_json::json!({ "record": rec, "report": rep }))
                })
                .collect();
            serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
        }
        OutputFormat::Csv | OutputFormat::Text => batch_csv(&dataset, &scored)?,
    };
    emit(out, &text)?;
    for d in &diagnostics {
        let _ = writeln!(err, "{d}");
    }
    Ok(if diagnostics.is_empty() { 0 } else { 1 })
}

fn row_message(e: &Error) -> String {
    match e {
        Error::Row { message, .. } => message.clone(),
        other => other.to_string(),
    }
}

fn batch_csv(dataset: &Dataset, scored: &[Result<AestheticsReport, Error>]) -> Result<String, Failure> {
    let fail = |e: csv::Error| Failure::Input(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = dataset.header.clone();
    for c in SCORE_COLUMNS {
        header.push_field(c);
    }
    w.write_record(&header).map_err(fail)?;
    for (row, result) in dataset.rows.iter().zip(scored) {
        let Ok(report) = result else { continue };
        let mut fields = row.fields.clone();
        fields.push_field(report.harmony.primary.label());
        fields.push_field(&report.harmony.count.to_string());
        fields.push_field(&format!("{:.4}", report.font_popularity));
        fields.push_field(&format!("{:.4}", report.score));
        w.write_record(&fields).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Reads `batch` output and tallies primary harmony labels.
pub fn read_scored_distribution(path: &Path, by_category: bool) -> Result<Distribution, Error> {
    let file = std::fs::File::open(path).map_err(|e| Error::Io { path: path.to_owned(), source: e })?;
    let mut rdr = csv::Reader::from_reader(std::io::BufReader::new(file));
    let header = rdr.headers().map_err(|e| Error::Schema(e.to_string()))?.clone();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::Schema(format!("{}: missing column {name:?}", path.display())))
    };
    let label_col = col(SCORE_COLUMNS[0])?;
    let cat_col = col("Website Category")?;
    let mut rows: Vec<(String, HarmonyTemplate)> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Schema(e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let row_err = |message: String| Error::Row { line, message };
        let label = rec.get(label_col).ok_or_else(|| row_err("missing harmony label".into()))?;
        let label = label.parse::<HarmonyTemplate>().map_err(|e| row_err(e.to_string()))?;
        let category = rec.get(cat_col).ok_or_else(|| row_err("missing category".into()))?;
        rows.push((category.trim().to_owned(), label));
    }
    Ok(harmony_distribution(rows.iter().map(|(c, l)| (c.as_str(), *l)), by_category))
}

fn cmd_distribution(settings: &Settings, path: &Path, by_category: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let dist = read_scored_distribution(path, by_category)?;
    let text = match settings.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Json => serde_json::to_string_pretty(&dist).expect("distribution serializes") + "\n",
        OutputFormat::Csv => {
            let mut s = String::from("Group,Harmony,Count,Percent\n");
            for g in &dist.groups {
                for sh in &g.shares {
                    let _ = writeln!(s, "{},{},{},{:.1}", csv_field(&g.name), sh.label, sh.count, sh.percent);
                }
            }
            s
        }
        OutputFormat::Text => distribution_text(&dist),
    };
    emit(out, &text)?;
    Ok(0)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn distribution_text(dist: &Distribution) -> String {
    let width = dist.groups.iter().map(|g| g.name.len()).max().unwrap_or(5).max(5);
    let mut s = format!("{:<width$}  {:<20}  {:>5}  {:>7}\n", "Group", "Harmony", "Count", "Percent");
    for g in &dist.groups {
        for sh in &g.shares {
            let _ = writeln!(s, "{:<width$}  {:<20}  {:>5}  {:>6.1}%", g.name, sh.label.label(), sh.count, sh.percent);
        }
        let _ = writeln!(s, "{:<width$}  {:<20}  {:>5}  {:>6.1}%", g.name, "(total)", g.total, 100.0);
    }
    s
}
