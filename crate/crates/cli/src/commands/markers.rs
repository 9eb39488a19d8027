// SPDX-License-Identifier: Apache-2.0

use qbm_core::scan::{default_grid_points, detect_recurrences, marker_series};

use super::{check_threshold, emit, load};
use crate::output::{markers_csv, series_columns, svg_plot};
use crate::{CliError, MarkersArgs};

pub fn run(args: &MarkersArgs) -> Result<u8, CliError> {
    check_threshold(args.threshold)?;
    if args.svg && args.out.is_none() {
        return Err(CliError::Usage("--svg needs --out".into()));
    }
    let (_, ens) = load(&args.config)?;
    let n = args
        .grid
        .unwrap_or_else(|| default_grid_points(&ens, args.t_min, args.t_max));
    let series = marker_series(&ens, args.t_min, args.t_max, n)?;
    if series.points.iter().any(|p| !(p.gamma_sq_total.is_finite() && p.overlap_total.is_finite())) {
        return Err(CliError::Numerical("non-finite marker value".into()));
    }
    emit(args.out.as_deref(), &markers_csv(&series))?;
    if let Some(out) = &args.out {
        if args.svg {
            std::fs::write(
                out.with_extension("svg"),
                svg_plot("markers", &series.grid, &series_columns(&series)),
            )?;
        }
    }
    if let Some(threshold) = args.threshold {
        let report = detect_recurrences(&series, threshold);
        eprintln!(
            "recurrences >= {threshold}: {} (window max {:.16e}{})",
            report.hit_times.len(),
            report.max_in_window,
            if report.degenerate_flat { ", flat" } else { "" }
        );
        for t in &report.hit_times {
            eprintln!("  t = {t:.16e}");
        }
    }
    Ok(0)
}
