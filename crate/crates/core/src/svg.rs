//! Plain-text SVG rendering of palettes and inference plots.
//!
//! Output depends only on the inputs; numbers are printed with fixed
//! precision so files diff cleanly.

use std::fmt::Write;

use crate::fuzzy::{InferenceResult, LinguisticVariable, RuleBase, SampledCurve};
use crate::palette::Palette;

const PALETTE_WIDTH: f64 = 600.0;
const SWATCH_HEIGHT: f64 = 120.0;
const LABEL_HEIGHT: f64 = 28.0;

const PLOT_W: f64 = 520.0;
const PLOT_H: f64 = 160.0;
const MARGIN_L: f64 = 50.0;
const MARGIN_T: f64 = 30.0;
const PANEL_GAP: f64 = 60.0;

const TERM_COLORS: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

fn header(w: f64, h: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Horizontal strip of swatches, each as wide as its weight, labelled with
/// its hex code and share.
pub fn palette_svg(palette: &Palette) -> String {
    let height = SWATCH_HEIGHT + LABEL_HEIGHT;
    let mut out = header(PALETTE_WIDTH, height);
    let mut x = 0.0;
    for e in palette.entries() {
        let w = e.weight * PALETTE_WIDTH;
        let hex = e.color.to_hex();
        let _ = writeln!(
            out,
            "  <rect x=\"{x:.2}\" y=\"0\" width=\"{w:.2}\" height=\"{SWATCH_HEIGHT:.0}\" fill=\"{hex}\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.0}\" text-anchor=\"middle\">{hex} ({:.1}%)</text>",
            x + w / 2.0,
            SWATCH_HEIGHT + 18.0,
            e.weight * 100.0
        );
        x += w;
    }
    out.push_str("</svg>\n");
    out
}

struct Panel {
    top: f64,
    lo: f64,
    hi: f64,
}

impl Panel {
    fn px(&self, x: f64) -> f64 {
        MARGIN_L + (x - self.lo) / (self.hi - self.lo) * PLOT_W
    }

    fn py(&self, m: f64) -> f64 {
        self.top + PLOT_H * (1.0 - m)
    }

    fn frame(&self, out: &mut String, title: &str) {
        let _ = writeln!(
            out,
            "  <text x=\"{MARGIN_L:.0}\" y=\"{:.2}\" font-weight=\"bold\">{}</text>",
            self.top - 10.0,
            escape(title)
        );
        let _ = writeln!(
            out,
            "  <rect x=\"{MARGIN_L:.0}\" y=\"{:.2}\" width=\"{PLOT_W:.0}\" height=\"{PLOT_H:.0}\" fill=\"none\" stroke=\"#999\"/>",
            self.top
        );
        for (m, label) in [(0.0, "0"), (1.0, "1")] {
            let _ = writeln!(
                out,
                "  <text x=\"{:.0}\" y=\"{:.2}\" text-anchor=\"end\">{label}</text>",
                MARGIN_L - 6.0,
                self.py(m) + 4.0
            );
        }
        for (x, anchor) in [(self.lo, "start"), (self.hi, "end")] {
            let _ = writeln!(
                out,
                "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"{anchor}\">{x}</text>",
                self.px(x),
                self.top + PLOT_H + 16.0
            );
        }
    }

    fn polyline(&self, out: &mut String, pts: impl Iterator<Item = (f64, f64)>, stroke: &str, extra: &str) {
        let coords: Vec<String> = pts.map(|(x, m)| format!("{:.2},{:.2}", self.px(x), self.py(m))).collect();
        let _ = writeln!(out, "  <polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\"{extra}/>", coords.join(" "));
    }

    fn vline(&self, out: &mut String, x: f64, stroke: &str, label: &str) {
        let px = self.px(x);
        let _ = writeln!(
            out,
            "  <line x1=\"{px:.2}\" y1=\"{:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"{stroke}\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>",
            self.top,
            self.top + PLOT_H
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" fill=\"{stroke}\">{}</text>",
            px + 4.0,
            self.top + 14.0,
            escape(label)
        );
    }

    fn legend(&self, out: &mut String, names: &[String]) {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(
                out,
                "  <text x=\"{:.0}\" y=\"{:.2}\" fill=\"{}\">{}</text>",
                MARGIN_L + PLOT_W + 10.0,
                self.top + 14.0 + 16.0 * i as f64,
                TERM_COLORS[i % TERM_COLORS.len()],
                escape(name)
            );
        }
    }
}

fn term_outline(var: &LinguisticVariable, term: usize) -> Vec<(f64, f64)> {
    let mf = var.terms()[term].1;
    let (a, d) = mf.support();
    let (b, c) = mf.core();
    vec![(a, 0.0), (b, 1.0), (c, 1.0), (d, 0.0)]
}

fn variable_panel(out: &mut String, panel: &Panel, var: &LinguisticVariable, crisp: Option<f64>) {
    panel.frame(out, var.name());
    for i in 0..var.terms().len() {
        panel.polyline(
            out,
            term_outline(var, i).into_iter(),
            TERM_COLORS[i % TERM_COLORS.len()],
            " stroke-width=\"1.5\"",
        );
    }
    let names: Vec<String> = var.terms().iter().map(|(n, _)| n.clone()).collect();
    panel.legend(out, &names);
    if let Some(x) = crisp {
        panel.vline(out, x, "#000", &format!("{x:.2}"));
    }
}

/// Input memberships with the crisp inputs marked, followed by the output
/// terms, the aggregated set and its centroid.
pub fn inference_svg(rule_base: &RuleBase, result: &InferenceResult) -> String {
    let panels = rule_base.inputs().len() + 1;
    let width = MARGIN_L + PLOT_W + 130.0;
    let height = MARGIN_T + panels as f64 * (PLOT_H + PANEL_GAP);
    let mut out = header(width, height);
    let mut top = MARGIN_T;
    for (var, &x) in rule_base.inputs().iter().zip(&result.inputs) {
        let (lo, hi) = var.universe();
        variable_panel(&mut out, &Panel { top, lo, hi }, var, Some(x));
        top += PLOT_H + PANEL_GAP;
    }
    let output = rule_base.output();
    let (lo, hi) = output.universe();
    let panel = Panel { top, lo, hi };
    variable_panel(&mut out, &panel, output, None);
    aggregated_area(&mut out, &panel, &result.curve);
    panel.vline(&mut out, result.crisp, "#d62728", &format!("centroid {:.1}", result.crisp));
    out.push_str("</svg>\n");
    out
}

fn aggregated_area(out: &mut String, panel: &Panel, curve: &SampledCurve) {
    let mut coords = vec![format!("{:.2},{:.2}", panel.px(curve.lo), panel.py(0.0))];
    coords.extend(curve.points().map(|(x, m)| format!("{:.2},{:.2}", panel.px(x), panel.py(m))));
    coords.push(format!("{:.2},{:.2}", panel.px(curve.hi), panel.py(0.0)));
    let _ = writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"#d62728\" fill-opacity=\"0.3\" stroke=\"#d62728\"/>",
        coords.join(" ")
    );
}
