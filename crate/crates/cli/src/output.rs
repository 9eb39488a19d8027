// SPDX-License-Identifier: Apache-2.0

//! CSV and SVG rendering. Everything here is a pure function of its input so
//! identical runs produce identical bytes.

use std::fmt::Write;

use qbm_core::scan::{MarkerSeries, PhaseSweep};

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn markers_csv(series: &MarkerSeries) -> String {
    let n = series.ensemble.oscillators.len();
    let mut out = String::from("t");
    for k in 1..=n {
        write!(out, ",gamma2_k{k}").unwrap();
    }
    for k in 1..=n {
        write!(out, ",overlap_k{k}").unwrap();
    }
    out.push_str(",gamma2_total,overlap_total\n");
    for p in &series.points {
        out.push_str(&format_value(p.t));
        for v in p.gamma_sq_per_osc.iter().chain(&p.overlap_per_osc) {
            out.push(',');
            out.push_str(&format_value(*v));
        }
        writeln!(out, ",{},{}", format_value(p.gamma_sq_total), format_value(p.overlap_total)).unwrap();
    }
    out
}

/// Column label for a sweep phase, e.g. `phi_3pi_8`.
pub fn phase_label(phi: f64) -> String {
    let eighths = (phi / (std::f64::consts::PI / 8.0)).round() as i64;
    if (phi - eighths as f64 * std::f64::consts::PI / 8.0).abs() > 1e-12 {
        return format!("phi_{phi}");
    }
    let g = gcd(eighths, 8);
    match (eighths / g, 8 / g) {
        (0, _) => "phi_0".to_string(),
        (1, den) => format!("phi_pi_{den}"),
        (num, 1) => format!("phi_{num}pi"),
        (num, den) => format!("phi_{num}pi_{den}"),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs().max(1)
    } else {
        gcd(b, a % b)
    }
}

pub fn phase_sweep_csv(sweep: &PhaseSweep) -> String {
    let mut out = String::from("t");
    for &phi in &sweep.phis {
        write!(out, ",eta_bar2_{}", phase_label(phi)).unwrap();
    }
    out.push('\n');
    for (i, &t) in sweep.grid.iter().enumerate() {
        out.push_str(&format_value(t));
        for col in &sweep.eta_bar_abs2 {
            out.push(',');
            out.push_str(&format_value(col[i]));
        }
        out.push('\n');
    }
    out
}

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

/// A bare line plot: axes, one polyline per column, a legend.
pub fn svg_plot(title: &str, x: &[f64], columns: &[(String, Vec<f64>)]) -> String {
    let (width, height, margin) = (900.0, 420.0, 50.0);
    let (x_lo, x_hi) = (x[0], x[x.len() - 1]);
    let (mut y_lo, mut y_hi) = columns
        .iter()
        .flat_map(|(_, ys)| ys.iter().copied())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), y| (lo.min(y), hi.max(y)));
    if !(y_hi > y_lo) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    let sx = |v: f64| margin + (v - x_lo) / (x_hi - x_lo) * (width - 2.0 * margin);
    let sy = |v: f64| height - margin - (v - y_lo) / (y_hi - y_lo) * (height - 2.0 * margin);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<text x="{margin}" y="20" font-family="sans-serif" font-size="14">{title}</text>"#).unwrap();
    writeln!(
        out,
        r#"<path d="M{m} {top} L{m} {bottom} L{right} {bottom}" stroke="black" fill="none"/>"#,
        m = margin,
        top = margin,
        bottom = height - margin,
        right = width - margin
    )
    .unwrap();
    for (label, value, px, py) in [
        ("x", x_lo, margin, height - margin + 16.0),
        ("x", x_hi, width - margin, height - margin + 16.0),
        ("y", y_lo, 4.0, height - margin),
        ("y", y_hi, 4.0, margin),
    ] {
        let anchor = if label == "x" { "middle" } else { "start" };
        writeln!(
            out,
            r#"<text x="{px:.1}" y="{py:.1}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{value:.4}</text>"#
        )
        .unwrap();
    }
    // Long series are thinned to at most ~4 points per horizontal pixel.
    let stride = (x.len() / 4000).max(1);
    for (i, (name, ys)) in columns.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let mut points = String::new();
        for j in (0..x.len()).step_by(stride).chain(std::iter::once(x.len() - 1)) {
            write!(points, "{:.2},{:.2} ", sx(x[j]), sy(ys[j])).unwrap();
        }
        writeln!(
            out,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="1" points="{}"/>"#,
            points.trim_end()
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" fill="{colour}">{name}</text>"#,
            width - margin - 140.0,
            margin + 14.0 * (i as f64 + 1.0)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Every CSV column after `t` as an SVG series.
pub fn series_columns(series: &MarkerSeries) -> Vec<(String, Vec<f64>)> {
    let n = series.ensemble.oscillators.len();
    let mut cols = Vec::new();
    for k in 0..n {
        cols.push((format!("gamma2_k{}", k + 1), series.points.iter().map(|p| p.gamma_sq_per_osc[k]).collect()));
    }
    for k in 0..n {
        cols.push((format!("overlap_k{}", k + 1), series.points.iter().map(|p| p.overlap_per_osc[k]).collect()));
    }
    cols.push(("gamma2_total".into(), series.points.iter().map(|p| p.gamma_sq_total).collect()));
    cols.push(("overlap_total".into(), series.points.iter().map(|p| p.overlap_total).collect()));
    cols
}
