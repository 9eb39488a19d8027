// SPDX-License-Identifier: Apache-2.0

use super::{default_grid_points, marker_series, MarkerSeries, ScanError};
use crate::markers::{marker_exponent, MarkerKind};
use crate::model::Ensemble;

/// Bracket width at which golden-section refinement stops.
pub const REFINE_TOL: f64 = 1e-11;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Near-1 maxima of a total marker.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceReport {
    pub kind: MarkerKind,
    pub threshold: f64,
    pub hit_times: Vec<f64>,
    pub hit_values: Vec<f64>,
    /// Largest marker value in the window, refined at the best maximum.
    pub max_in_window: f64,
    pub window: (f64, f64),
    /// The marker is identically 1 (e.g. `Y = Y′`); every grid point is a hit.
    pub degenerate_flat: bool,
}

/// Minimizes `f` on `[a, b]` by golden-section search.
fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > REFINE_TOL * (1.0 + a.abs()) {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Interior local maxima of the total [`MarkerKind::Decoherence`] marker.
pub fn detect_recurrences(series: &MarkerSeries, threshold: f64) -> RecurrenceReport {
    detect_recurrences_of(series, MarkerKind::Decoherence, threshold)
}

/// Interior grid maxima are refined on the analytic marker between their
/// neighbours; those reaching `threshold` are hits.
pub fn detect_recurrences_of(series: &MarkerSeries, kind: MarkerKind, threshold: f64) -> RecurrenceReport {
    assert!(threshold > 0.0 && threshold <= 1.0, "threshold must lie in (0, 1]");
    let values: Vec<f64> = series.totals(kind).collect();
    let grid = &series.grid;
    let window = (grid[0], grid[grid.len() - 1]);

    if values.iter().all(|&v| v == 1.0) {
        return RecurrenceReport {
            kind,
            threshold,
            hit_times: grid.clone(),
            hit_values: values,
            max_in_window: 1.0,
            window,
            degenerate_flat: true,
        };
    }

    let exponent = |t: f64| marker_exponent(&series.ensemble, kind, t);
    let mut hit_times = Vec::new();
    let mut hit_values = Vec::new();
    let mut max_in_window = values.iter().copied().fold(0.0, f64::max);
    for i in 1..values.len() - 1 {
        if !(values[i] >= values[i - 1] && values[i] > values[i + 1]) {
            continue;
        }
        let (t, e) = golden_min(exponent, grid[i - 1], grid[i + 1]);
        let value = (-e).exp();
        max_in_window = max_in_window.max(value);
        if value >= threshold {
            hit_times.push(t);
            hit_values.push(value);
        }
    }
    RecurrenceReport {
        kind,
        threshold,
        hit_times,
        hit_values,
        max_in_window,
        window,
        degenerate_flat: false,
    }
}

/// Refined maximum of the total marker over `[t_lo, t_hi]` at the default
/// grid density.
pub fn window_max(ens: &Ensemble, kind: MarkerKind, t_lo: f64, t_hi: f64) -> Result<f64, ScanError> {
    let series = marker_series(ens, t_lo, t_hi, default_grid_points(ens, t_lo, t_hi))?;
    Ok(detect_recurrences_of(&series, kind, 1.0).max_in_window)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::tests::ensemble;
    use std::f64::consts::PI;

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let (t, v) = golden_min(|x| (x - 0.3).powi(2), 0.0, 1.0);
        assert!((t - 0.3).abs() < 1e-9 && v < 1e-18);
    }

    #[test]
    fn fig2_hits_lattice() {
        let e = ensemble(7.0, &[5.0]);
        let s = marker_series(&e, 0.0, 4.0 * PI, 2001).unwrap();
        let r = detect_recurrences(&s, 1.0 - 1e-9);
        assert_eq!(r.hit_times.len(), 3, "{:?}", r.hit_times);
        for (t, want) in r.hit_times.iter().zip([PI, 2.0 * PI, 3.0 * PI]) {
            assert!((t - want).abs() < 1e-8, "{t}");
        }
        assert!(!r.degenerate_flat);
    }

    #[test]
    fn hits_do_not_depend_on_grid_density() {
        let e = ensemble(7.0, &[2.0, 3.0, 4.0, 5.0, 6.0]);
        let coarse = detect_recurrences(&marker_series(&e, 0.0, 7.0, 1500).unwrap(), 0.999_999);
        let fine = detect_recurrences(&marker_series(&e, 0.0, 7.0, 3000).unwrap(), 0.999_999);
        assert_eq!(coarse.hit_times.len(), fine.hit_times.len());
        assert_eq!(coarse.hit_times.len(), 1);
        for (a, b) in coarse.hit_times.iter().zip(&fine.hit_times) {
            assert!((a - b).abs() < 1e-8);
        }
        assert!((coarse.hit_times[0] - 2.0 * PI).abs() < 1e-8);
    }

    #[test]
    fn equal_branches_are_flat() {
        let mut e = ensemble(7.0, &[5.0]);
        e.trajectory.y_prime = e.trajectory.y;
        let s = marker_series(&e, 0.0, 3.0, 50).unwrap();
        let r = detect_recurrences(&s, 0.5);
        assert!(r.degenerate_flat);
        assert_eq!(r.hit_times, s.grid);
    }
}
