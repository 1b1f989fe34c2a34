//! Deterministic CSV and SVG renderings of sweep tables.
//!
//! Both emitters are pure functions of the table contents: identical tables
//! produce byte-identical files, regardless of how the table was computed.

use std::fs;
use std::path::Path;

use crate::error::{ModelError, Result};
use crate::explorer::sweep::SweepTable;
use crate::format::fmt_g;

/// Fixed series palette, cycled by ascending aspect-ratio index.
const PALETTE: [&str; 8] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];

const W: f64 = 800.0;
const H: f64 = 600.0;
const PLOT_LEFT: f64 = 70.0;
const PLOT_RIGHT: f64 = 640.0;
const PLOT_TOP: f64 = 20.0;
const PLOT_BOTTOM: f64 = 540.0;

fn require_rows(table: &SweepTable) -> Result<()> {
    if table.is_empty() {
        return Err(ModelError::domain("table", "emission needs at least one row"));
    }
    Ok(())
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|source| ModelError::Io { path: path.to_owned(), source })
}

/// CSV with header `lambda,alpha_rad,F_alpha,k_N_per_mm`, 9-significant-digit
/// numbers, LF line endings; the stiffness field is empty when the sweep ran
/// without physical context.
pub fn render_csv(table: &SweepTable) -> Result<String> {
    require_rows(table)?;
    let mut out = String::from("lambda,alpha_rad,F_alpha,k_N_per_mm\n");
    for r in table.rows() {
        out.push_str(&fmt_g(r.lambda, 9));
        out.push(',');
        out.push_str(&fmt_g(r.alpha_rad, 9));
        out.push(',');
        out.push_str(&fmt_g(r.f_alpha, 9));
        out.push(',');
        if let Some(k) = r.k_n_per_mm {
            out.push_str(&fmt_g(k, 9));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_csv(table: &SweepTable, path: &Path) -> Result<()> {
    write_file(path, &render_csv(table)?)
}

/// Single 800x600 line chart: one polyline per aspect ratio, axes labeled
/// `bending angle (rad)` versus `F(alpha)` (or `k (N/mm)` when every row
/// carries a stiffness), legend keyed by aspect ratio. Self-contained — no
/// external references — with deterministic element ordering.
pub fn render_svg(table: &SweepTable) -> Result<String> {
    require_rows(table)?;
    let rows = table.rows();
    let with_k = rows.iter().all(|r| r.k_n_per_mm.is_some());
    let y_label = if with_k { "k (N/mm)" } else { "F(alpha)" };
    let value_of = |r: &crate::explorer::sweep::SweepRow| {
        if with_k {
            r.k_n_per_mm.expect("checked above")
        } else {
            r.f_alpha
        }
    };

    let mut a_min = f64::INFINITY;
    let mut a_max = f64::NEG_INFINITY;
    let mut v_min = f64::INFINITY;
    let mut v_max = f64::NEG_INFINITY;
    for r in rows {
        a_min = a_min.min(r.alpha_rad);
        a_max = a_max.max(r.alpha_rad);
        let v = value_of(r);
        v_min = v_min.min(v);
        v_max = v_max.max(v);
    }
    let x_px = move |a: f64| {
        if a_max == a_min {
            (PLOT_LEFT + PLOT_RIGHT) / 2.0
        } else {
            PLOT_LEFT + (a - a_min) / (a_max - a_min) * (PLOT_RIGHT - PLOT_LEFT)
        }
    };
    let y_px = move |v: f64| {
        if v_max == v_min {
            (PLOT_TOP + PLOT_BOTTOM) / 2.0
        } else {
            PLOT_BOTTOM - (v - v_min) / (v_max - v_min) * (PLOT_BOTTOM - PLOT_TOP)
        }
    };
    let num = |x: f64| fmt_g(x, 6);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         width=\"{W}\" height=\"{H}\" font-family=\"monospace\" font-size=\"13\">\n"
    ));
    svg.push_str(&format!("  <rect width=\"{W}\" height=\"{H}\" fill=\"#ffffff\"/>\n"));

    // Axes.
    svg.push_str(&format!(
        "  <line x1=\"{PLOT_LEFT}\" y1=\"{PLOT_BOTTOM}\" x2=\"{PLOT_RIGHT}\" \
         y2=\"{PLOT_BOTTOM}\" stroke=\"#000000\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{PLOT_LEFT}\" y1=\"{PLOT_TOP}\" x2=\"{PLOT_LEFT}\" \
         y2=\"{PLOT_BOTTOM}\" stroke=\"#000000\"/>\n"
    ));

    // Ticks and numeric labels, five per axis.
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let a = a_min + (a_max - a_min) * t;
        let x = x_px(a);
        svg.push_str(&format!(
            "  <line x1=\"{x}\" y1=\"{PLOT_BOTTOM}\" x2=\"{x}\" y2=\"{}\" stroke=\"#000000\"/>\n",
            num(PLOT_BOTTOM + 5.0),
            x = num(x),
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            num(x),
            num(PLOT_BOTTOM + 20.0),
            num(a)
        ));
        let v = v_min + (v_max - v_min) * t;
        let y = y_px(v);
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{y}\" x2=\"{PLOT_LEFT}\" y2=\"{y}\" stroke=\"#000000\"/>\n",
            num(PLOT_LEFT - 5.0),
            y = num(y),
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
            num(PLOT_LEFT - 8.0),
            num(y + 4.0),
            num(v)
        ));
    }

    // Axis titles.
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">bending angle (rad)</text>\n",
        num((PLOT_LEFT + PLOT_RIGHT) / 2.0),
        num(PLOT_BOTTOM + 45.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"18\" y=\"{mid}\" text-anchor=\"middle\" \
         transform=\"rotate(-90 18 {mid})\">{y_label}</text>\n",
        mid = num((PLOT_TOP + PLOT_BOTTOM) / 2.0),
    ));

    // One polyline per aspect ratio, ascending.
    let series = table.series();
    for (idx, (_, rows)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let points: Vec<String> = rows
            .iter()
            .map(|r| format!("{},{}", num(x_px(r.alpha_rad)), num(y_px(value_of(r)))))
            .collect();
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }

    // Legend keyed by aspect ratio.
    for (idx, (lambda, _)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = 35.0 + 22.0 * idx as f64;
        svg.push_str(&format!(
            "  <line x1=\"655\" y1=\"{y}\" x2=\"685\" y2=\"{y}\" stroke=\"{color}\" \
             stroke-width=\"2\"/>\n",
            y = num(y),
        ));
        svg.push_str(&format!(
            "  <text x=\"692\" y=\"{}\">lambda = {}</text>\n",
            num(y + 4.0),
            num(*lambda)
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_svg(table: &SweepTable, path: &Path) -> Result<()> {
    write_file(path, &render_svg(table)?)
}
