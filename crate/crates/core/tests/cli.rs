mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::{four_hue_image, save_png};
use palette_fis::palette::PixelImage;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_palette-fis"));
    cmd.env_remove("PALETTE_FIS_CONFIG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn fixture_png(dir: &Path) -> PathBuf {
    let p = dir.join("site.png");
    save_png(&four_hue_image(), &p);
    p
}

fn sample_csv() -> PathBuf {
    common::data_path("sample_sites.csv")
}

#[test]
fn analyze_json_reports_worked_example() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    let o = run(&["analyze", path_str(&png), "--font", "Roboto, sans-serif", "--k", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["schema", "palette", "harmony", "font_family", "font_popularity", "rule_firings", "score", "provenance"]
    {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["schema"], 1);
    assert_eq!(v["font_family"], "roboto");
    assert_eq!(v["harmony"]["count"], 3);
    assert_eq!(v["harmony"]["primary"], "Rectangular");
    assert_eq!(v["rule_firings"].as_array().unwrap().len(), 9);
    assert_eq!(v["provenance"]["k"], 4);
    let score = v["score"].as_f64().unwrap();
    assert!((score - 57.9).abs() <= 3.0, "{score}");
}

#[test]
fn analyze_text_and_csv_formats() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    let text = run(&["analyze", path_str(&png), "--font", "Roboto"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("Visual Aesthetics"), "{}", stdout(&text));

    let csv_out = run(&["analyze", path_str(&png), "--font", "Roboto", "--format", "csv"]);
    assert_eq!(csv_out.status.code(), Some(0));
    let body = stdout(&csv_out);
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    assert_eq!(rdr.records().count(), 1);
}

#[test]
fn missing_image_is_an_input_error() {
    let o = run(&["analyze", "/nonexistent/shot.png", "--font", "Roboto"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/nonexistent/shot.png"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn config_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    let rules = dir.path().join("bad.toml");
    std::fs::write(&rules, "name = \"broken\"\nrules = [\"IF Nope IS x THEN Y IS z\"]\n").unwrap();
    let o = run(&["analyze", path_str(&png), "--font", "Roboto", "--rules", path_str(&rules)]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));

    let o = run(&["analyze", path_str(&png), "--font", "Roboto", "--k", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["analyze", path_str(&png)]);
    assert_eq!(o.status.code(), Some(2), "missing --font is a usage error");
}

#[test]
fn empty_font_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    let o = run(&["analyze", path_str(&png), "--font", " , serif"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn batch_appends_score_columns() {
    let o = run(&["batch", path_str(&sample_csv())]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let body = stdout(&o);
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let header = rdr.headers().unwrap().clone();
    assert_eq!(header.len(), 12);
    assert_eq!(
        header.iter().skip(8).collect::<Vec<_>>(),
        ["Primary Harmony", "Harmony Count", "Font Popularity", "Visual Aesthetics"]
    );
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(&rows[0][1], "YouTube");
    assert_eq!(&rows[0][8], "Monochromatic");
}

#[test]
fn batch_of_empty_dataset_is_header_only() {
    let dir = TempDir::new().unwrap();
    let header = std::fs::read_to_string(sample_csv()).unwrap().lines().next().unwrap().to_owned();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, format!("{header}\n")).unwrap();
    let o = run(&["batch", path_str(&empty)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 1);
}

fn dataset_with_bad_hex(dir: &Path) -> PathBuf {
    let text = std::fs::read_to_string(sample_csv()).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    lines[3] = lines[3].replacen('#', "#zz", 1);
    let p = dir.join("bad.csv");
    std::fs::write(&p, lines.join("\n") + "\n").unwrap();
    p
}

#[test]
fn batch_skips_bad_rows_with_a_diagnostic() {
    let dir = TempDir::new().unwrap();
    let bad = dataset_with_bad_hex(dir.path());
    let o = run(&["batch", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let body = stdout(&o);
    assert_eq!(csv::Reader::from_reader(body.as_bytes()).records().count(), 9);
    let diag = stderr(&o);
    assert_eq!(diag.lines().filter(|l| l.contains("line 4")).count(), 1, "{diag}");

    let strict = run(&["batch", path_str(&bad), "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(strict.stdout.is_empty());
}

#[test]
fn distribution_tallies_scored_csv() {
    let dir = TempDir::new().unwrap();
    let scored = dir.path().join("scored.csv");
    std::fs::write(&scored, run(&["batch", path_str(&sample_csv())]).stdout).unwrap();

    let o = run(&["distribution", path_str(&scored), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let all = &v["groups"][0];
    assert_eq!(all["total"], 10);

    let by_cat = run(&["distribution", path_str(&scored), "--by-category", "--format", "csv"]);
    let body = stdout(&by_cat);
    let groups: std::collections::BTreeSet<String> =
        csv::Reader::from_reader(body.as_bytes()).records().map(|r| r.unwrap()[0].to_owned()).collect();
    assert!(groups.len() >= 2, "{body}");
}

#[test]
fn distribution_of_single_row_is_one_hundred_percent() {
    let dir = TempDir::new().unwrap();
    let text = std::fs::read_to_string(sample_csv()).unwrap();
    let single = dir.path().join("one.csv");
    std::fs::write(&single, text.lines().take(2).collect::<Vec<_>>().join("\n") + "\n").unwrap();
    let scored = dir.path().join("scored.csv");
    std::fs::write(&scored, run(&["batch", path_str(&single)]).stdout).unwrap();
    let o = run(&["distribution", path_str(&scored), "--format", "csv"]);
    assert_eq!(stdout(&o), "Group,Harmony,Count,Percent\nAll,Monochromatic,1,100.0\n");
}

#[test]
fn distribution_requires_scored_columns() {
    let o = run(&["distribution", path_str(&sample_csv())]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Primary Harmony"), "{}", stderr(&o));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    let mut outputs = Vec::new();
    for run_id in 0..2 {
        let svg = dir.path().join(format!("svg{run_id}"));
        let o = run(&[
            "analyze",
            path_str(&png),
            "--font",
            "Roboto",
            "--seed",
            "7",
            "--format",
            "json",
            "--svg-dir",
            path_str(&svg),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let palette = std::fs::read(svg.join("palette.svg")).unwrap();
        let inference = std::fs::read(svg.join("inference.svg")).unwrap();
        assert!(String::from_utf8_lossy(&inference).starts_with("<svg"));
        outputs.push((o.stdout, palette, inference));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn env_config_is_honored_and_flags_override_it() {
    let dir = TempDir::new().unwrap();
    let png = fixture_png(dir.path());
    std::fs::write(dir.path().join("fonts.tsv"), "roboto\t90\n").unwrap();
    let cfg = dir.path().join("palette-fis.toml");
    std::fs::write(&cfg, "k = 2\nseed = 5\nfonts = \"fonts.tsv\"\nformat = \"json\"\n").unwrap();

    let o =
        bin().env("PALETTE_FIS_CONFIG", &cfg).args(["analyze", path_str(&png), "--font", "Roboto"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["provenance"]["k"], 2);
    assert_eq!(v["provenance"]["seed"], 5);
    assert_eq!(v["font_popularity"], 90.0);

    let o = bin()
        .env("PALETTE_FIS_CONFIG", &cfg)
        .args(["analyze", path_str(&png), "--font", "Roboto", "--k", "3"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["provenance"]["k"], 3);

    std::fs::write(&cfg, "colours = 3\n").unwrap();
    let o =
        bin().env("PALETTE_FIS_CONFIG", &cfg).args(["analyze", path_str(&png), "--font", "Roboto"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transparent_image_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let img = PixelImage::from_rgba(4, 4, vec![[10, 20, 30, 0]; 16]).unwrap();
    let p = dir.path().join("clear.png");
    save_png(&img, &p);
    let o = run(&["analyze", path_str(&p), "--font", "Roboto"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}
