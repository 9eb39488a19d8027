// SPDX-License-Identifier: Apache-2.0

use qbm_core::scan::{detect_recurrences, figure_data, FigureId, FigureOverrides};

use super::check_threshold;
use crate::output::{markers_csv, phase_label, phase_sweep_csv, series_columns, svg_plot};
use crate::{CliError, FigureArgs};

/// Writes `<id>.csv` and `<id>.meta.json` (and `<id>.svg` with `--svg`) into
/// the output directory. The φ-sweep datasets also get `<id>_markers.csv`.
pub fn run(args: &FigureArgs) -> Result<u8, CliError> {
    check_threshold(args.threshold)?;
    let id: FigureId = args.figure_id.parse()?;
    let overrides = FigureOverrides {
        t_max: args.t_max,
        n_points: args.grid,
        ..Default::default()
    };
    let data = figure_data(id, &overrides)?;
    std::fs::create_dir_all(&args.out)?;
    let path = |suffix: &str| args.out.join(format!("{id}{suffix}"));

    match &data.phase_sweep {
        Some(sweep) => {
            std::fs::write(path(".csv"), phase_sweep_csv(sweep))?;
            std::fs::write(path("_markers.csv"), markers_csv(&data.series))?;
            if args.svg {
                let cols = sweep
                    .phis
                    .iter()
                    .zip(&sweep.eta_bar_abs2)
                    .map(|(&phi, col)| (format!("eta_bar2_{}", phase_label(phi)), col.clone()))
                    .collect::<Vec<_>>();
                std::fs::write(path(".svg"), svg_plot(id.name(), &sweep.grid, &cols))?;
            }
        }
        None => {
            std::fs::write(path(".csv"), markers_csv(&data.series))?;
            if args.svg {
                std::fs::write(
                    path(".svg"),
                    svg_plot(id.name(), &data.series.grid, &series_columns(&data.series)),
                )?;
            }
        }
    }
    let meta = serde_json::to_string_pretty(&data.metadata).expect("string map serializes");
    std::fs::write(path(".meta.json"), meta + "\n")?;

    if let Some(threshold) = args.threshold {
        let report = detect_recurrences(&data.series, threshold);
        println!("{id}: {} recurrence(s) >= {threshold}", report.hit_times.len());
        for t in &report.hit_times {
            println!("  t = {t:.16e}");
        }
        println!("window max {:.16e}", report.max_in_window);
    }
    Ok(0)
}
