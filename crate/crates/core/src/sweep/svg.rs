//! Static SVG line charts, one per quantity, stacked vertically.

use std::fmt::Write as _;
use std::path::Path;

use super::SweepResult;
use crate::error::Result;

const WIDTH: f64 = 720.0;
const CHART_HEIGHT: f64 = 360.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 160.0;
const TOP: f64 = 36.0;
const BOTTOM: f64 = 48.0;
const TICKS: usize = 5;
const MARGIN: f64 = 0.05;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn tick_label(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-2..1e4).contains(&a) {
        format!("{v:.2e}")
    } else {
        let s = format!("{v:.3}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.to_string()
        }
    }
}

/// Data range widened by 5% on each side; flat data gets a unit-scale span.
fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let span = hi - lo;
    if span > 0.0 {
        (lo - MARGIN * span, hi + MARGIN * span)
    } else {
        let half = if lo == 0.0 { 0.5 } else { 0.5 * lo.abs() };
        (lo - half, hi + half)
    }
}

/// Renders the document; `None` when there is nothing to plot.
pub fn render_svg(result: &SweepResult) -> Option<String> {
    let quantities = result.quantities();
    if quantities.is_empty() {
        return None;
    }
    let blocks = result.series_blocks();
    let height = CHART_HEIGHT * quantities.len() as f64;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = CHART_HEIGHT - TOP - BOTTOM;
    let axis = result.vary().name();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}" font-family="sans-serif" font-size="12">
<rect width="100%" height="100%" fill="white"/>"#
    );

    let (x_lo, x_hi) = padded(result.provenance.from, result.provenance.to);
    for (qi, q) in quantities.iter().enumerate() {
        let ys = result.rows.iter().filter_map(|r| r.values[qi]);
        let (lo, hi) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), y| {
            (a.min(y), b.max(y))
        });
        let (y_lo, y_hi) = if lo.is_finite() {
            padded(lo, hi)
        } else {
            (0.0, 1.0)
        };
        let oy = CHART_HEIGHT * qi as f64;
        let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
        let py = |y: f64| oy + TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

        let _ = writeln!(out, r#"<g class="chart" id="chart-{}">"#, q.name());
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="14">{}</text>"#,
            LEFT + plot_w / 2.0,
            oy + TOP - 14.0,
            q.name()
        );
        let _ = writeln!(
            out,
            r#"<rect x="{LEFT:.2}" y="{:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="black"/>"#,
            oy + TOP
        );
        for k in 0..TICKS {
            let f = k as f64 / (TICKS - 1) as f64;
            let xv = result.provenance.from + f * (result.provenance.to - result.provenance.from);
            let yv = y_lo + f * (y_hi - y_lo);
            let (tx, ty) = (px(xv), py(yv));
            let base = oy + TOP + plot_h;
            let _ = writeln!(
                out,
                r#"<line x1="{tx:.2}" y1="{base:.2}" x2="{tx:.2}" y2="{:.2}" stroke="black"/><text x="{tx:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                base + 5.0,
                base + 18.0,
                tick_label(xv)
            );
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{ty:.2}" x2="{LEFT:.2}" y2="{ty:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 5.0,
                LEFT - 8.0,
                ty + 4.0,
                tick_label(yv)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + plot_w / 2.0,
            oy + CHART_HEIGHT - 8.0,
            escape(axis)
        );

        for (si, (label, rows)) in blocks.iter().enumerate() {
            let colour = PALETTE[si % PALETTE.len()];
            let mut segment: Vec<String> = Vec::new();
            let flush = |segment: &mut Vec<String>, out: &mut String| {
                if !segment.is_empty() {
                    let _ = writeln!(
                        out,
                        r#"<polyline class="series" data-series="{}" fill="none" stroke="{colour}" stroke-width="1.5" points="{}"/>"#,
                        escape(label),
                        segment.join(" ")
                    );
                    segment.clear();
                }
            };
            for row in rows.iter() {
                match row.values[qi] {
                    Some(y) => segment.push(format!("{:.2},{:.2}", px(row.x), py(y))),
                    None => flush(&mut segment, &mut out),
                }
            }
            flush(&mut segment, &mut out);

            let ly = oy + TOP + 10.0 + 18.0 * si as f64;
            let lx = LEFT + plot_w + 14.0;
            let _ = writeln!(
                out,
                r#"<line class="legend" x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{colour}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text>"#,
                lx + 20.0,
                lx + 26.0,
                ly + 4.0,
                escape(label)
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Some(out)
}

/// Writes the chart document; with no quantities nothing is written.
pub fn emit_svg(result: &SweepResult, path: impl AsRef<Path>) -> Result<()> {
    if let Some(doc) = render_svg(result) {
        std::fs::write(path, doc)?;
    }
    Ok(())
}
