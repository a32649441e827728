//! SVG charts of ranked scores, with the plotted data alongside as CSV.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::centrality::Measure;
use crate::error::{Result, SxError};
use crate::pipeline::{AnalysisRun, ScoreEntry};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 48.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Debug, Clone, Default)]
pub struct PlotOutput {
    pub files: Vec<PathBuf>,
    pub warnings: Vec<String>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn plot_w() -> f64 {
    WIDTH - MARGIN_LEFT - MARGIN_RIGHT
}

fn plot_h() -> f64 {
    HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
}

fn svg_open(title: &str, y_label: &str, y_max: f64) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (x0, y0, y1) = (MARGIN_LEFT, MARGIN_TOP + plot_h(), MARGIN_TOP);
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#,
        x0 + plot_w()
    );
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>"#);
    for t in 0..=4 {
        let frac = f64::from(t) / 4.0;
        let y = y0 - frac * plot_h();
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{:.1}" text-anchor="end" dominant-baseline="middle">{}</text>"#,
            x0 - 6.0,
            y,
            tick_label(frac * y_max)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.1}" text-anchor="middle" transform="rotate(-90 16 {:.1})">{}</text>"#,
        MARGIN_TOP + plot_h() / 2.0,
        MARGIN_TOP + plot_h() / 2.0,
        escape(y_label)
    );
    s
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".into()
    } else {
        s.into()
    }
}

fn bar_chart(title: &str, measure: Measure, entries: &[ScoreEntry]) -> String {
    let y_max = entries.iter().map(|e| e.score).fold(0.0, f64::max);
    let scale = if y_max > 0.0 { y_max } else { 1.0 };
    let mut s = svg_open(title, measure.name(), scale);
    let n = entries.len().max(1) as f64;
    let slot = plot_w() / n;
    let bar = (slot * 0.8).max(0.5);
    let base = MARGIN_TOP + plot_h();
    for (i, e) in entries.iter().enumerate() {
        let h = e.score / scale * plot_h();
        let x = MARGIN_LEFT + i as f64 * slot + (slot - bar) / 2.0;
        let _ = writeln!(
            s,
            r#"<rect x="{x:.2}" y="{:.2}" width="{bar:.2}" height="{h:.2}" fill="{}"><title>{{{}}} rank {} score {}</title></rect>"#,
            base - h,
            PALETTE[0],
            escape(&e.simplex.join(",")),
            e.rank,
            e.score
        );
    }
    // label bars only when they stay legible
    if entries.len() <= 40 {
        for (i, e) in entries.iter().enumerate() {
            let x = MARGIN_LEFT + (i as f64 + 0.5) * slot;
            let _ = writeln!(
                s,
                r#"<text x="{x:.2}" y="{:.1}" text-anchor="end" font-size="9" transform="rotate(-60 {x:.2} {:.1})">{}</text>"#,
                base + 12.0,
                base + 12.0,
                escape(&e.simplex.join(","))
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Scores normalized by each level's maximum, against rank position in [0, 1].
fn comparison_chart(title: &str, series: &[(usize, Vec<(f64, f64)>)]) -> String {
    let mut s = svg_open(title, "score / level max", 1.0);
    let base = MARGIN_TOP + plot_h();
    for (i, (k, points)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", MARGIN_LEFT + x * plot_w(), base - y * plot_h()))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            coords.join(" ")
        );
        for c in &coords {
            let (cx, cy) = c.split_once(',').unwrap_or(("0", "0"));
            let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="2.5" fill="{color}"/>"#);
        }
        let ly = MARGIN_TOP + 14.0 + 16.0 * i as f64;
        let lx = MARGIN_LEFT + plot_w() - 80.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{ly}" dominant-baseline="middle">k = {k}</text>"#,
            lx + 18.0,
            lx + 24.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">rank position</text>"#,
        MARGIN_LEFT + plot_w() / 2.0,
        HEIGHT - 12.0
    );
    s.push_str("</svg>\n");
    s
}

fn write(path: PathBuf, contents: &str, files: &mut Vec<PathBuf>) -> Result<()> {
    fs::write(&path, contents).map_err(|e| SxError::io(&path, e))?;
    files.push(path);
    Ok(())
}

/// Writes `k{level}_{measure}.svg` per analyzed level and measure,
/// `compare_{measure}.svg` per measure, and a `.csv` of the plotted data
/// next to each chart.
pub fn emit_plots(run: &AnalysisRun, out_dir: impl AsRef<Path>) -> Result<PlotOutput> {
    let out_dir = out_dir.as_ref();
    let mut out = PlotOutput::default();
    let analyzed: Vec<_> = run.levels.iter().filter(|l| l.measures.is_some()).collect();
    if analyzed.is_empty() {
        out.warnings
            .push(format!("{}: no analyzed levels, nothing to plot", run.network));
        return Ok(out);
    }
    fs::create_dir_all(out_dir).map_err(|e| SxError::io(out_dir, e))?;

    for level in &analyzed {
        for (measure, entries) in level.measures.iter().flatten() {
            let stem = format!("k{}_{}", level.k, measure);
            let title = format!("{}: {} centrality, level {}", run.network, measure, level.k);
            write(
                out_dir.join(format!("{stem}.svg")),
                &bar_chart(&title, *measure, entries),
                &mut out.files,
            )?;
            let mut csv = String::from("position;simplex;score;rank\n");
            for (i, e) in entries.iter().enumerate() {
                let _ = writeln!(csv, "{};{{{}}};{};{}", i + 1, e.simplex.join(","), e.score, e.rank);
            }
            write(out_dir.join(format!("{stem}.csv")), &csv, &mut out.files)?;
        }
    }

    for measure in Measure::ALL {
        let mut series = Vec::new();
        let mut csv = String::from("k;position;simplex;normalized_score;rank\n");
        for level in &analyzed {
            let Some(entries) = level.ranking(measure) else {
                continue;
            };
            let max = entries.iter().map(|e| e.score).fold(0.0, f64::max);
            let denom = (entries.len().max(2) - 1) as f64;
            let points = entries
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let y = if max > 0.0 { e.score / max } else { 0.0 };
                    let _ = writeln!(
                        csv,
                        "{};{};{{{}}};{};{}",
                        level.k,
                        i + 1,
                        e.simplex.join(","),
                        y,
                        e.rank
                    );
                    (i as f64 / denom, y)
                })
                .collect();
            series.push((level.k, points));
        }
        if series.is_empty() {
            continue;
        }
        let title = format!("{}: {} centrality across levels", run.network, measure);
        write(
            out_dir.join(format!("compare_{measure}.svg")),
            &comparison_chart(&title, &series),
            &mut out.files,
        )?;
        write(out_dir.join(format!("compare_{measure}.csv")), &csv, &mut out.files)?;
    }
    Ok(out)
}
