// SPDX-License-Identifier: Apache-2.0

//! Time-grid evaluation of the closed-form markers, recurrence detection and
//! the figure datasets.

mod envelope;
mod figures;
mod recurrence;

use rayon::prelude::*;
use thiserror::Error;

use crate::markers::{marker_point, MarkerError, MarkerKind, MarkerPoint};
use crate::model::Ensemble;

pub use envelope::{envelope_check, EnvelopeCheck};
pub use figures::{figure_data, phase_sweep, FigureData, FigureId, FigureOverrides, PhaseSweep, PHASE_GRID};
pub use recurrence::{detect_recurrences, detect_recurrences_of, window_max, RecurrenceReport, REFINE_TOL};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScanError {
    #[error("invalid time range [{t_lo}, {t_hi}] with {n_points} points")]
    InvalidRange { t_lo: f64, t_hi: f64, n_points: usize },
    #[error("unknown figure id {0:?}")]
    UnknownFigure(String),
    #[error(transparent)]
    Beating(#[from] MarkerError),
    #[error("only {0} recurrence(s) found; need two to measure a period")]
    TooFewRecurrences(usize),
}

/// Grid points per period of the fastest cosine in `|η̄|²`.
pub const POINTS_PER_FAST_PERIOD: f64 = 40.0;

/// Markers on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkerSeries {
    pub ensemble: Ensemble,
    pub grid: Vec<f64>,
    pub points: Vec<MarkerPoint>,
}

impl MarkerSeries {
    pub fn totals(&self, kind: MarkerKind) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(move |p| p.total(kind))
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }
}

/// `n_points` equally spaced times from `t_lo` to `t_hi` inclusive.
pub fn uniform_grid(t_lo: f64, t_hi: f64, n_points: usize) -> Result<Vec<f64>, ScanError> {
    if !(t_lo >= 0.0 && t_hi > t_lo && t_hi.is_finite() && n_points >= 2) {
        return Err(ScanError::InvalidRange { t_lo, t_hi, n_points });
    }
    let step = (t_hi - t_lo) / (n_points - 1) as f64;
    Ok((0..n_points)
        .map(|i| if i + 1 == n_points { t_hi } else { t_lo + step * i as f64 })
        .collect())
}

/// Grid size giving [`POINTS_PER_FAST_PERIOD`] points per `2π/(Ω + max ω_k)`.
pub fn default_grid_points(ens: &Ensemble, t_lo: f64, t_hi: f64) -> usize {
    let fastest = ens
        .oscillators
        .iter()
        .map(|o| o.omega)
        .fold(0.0, f64::max)
        + ens.central.omega_big;
    let period = std::f64::consts::TAU / fastest;
    (((t_hi - t_lo) / period * POINTS_PER_FAST_PERIOD).ceil() as usize + 1).max(2)
}

pub fn marker_series(ens: &Ensemble, t_lo: f64, t_hi: f64, n_points: usize) -> Result<MarkerSeries, ScanError> {
    let grid = uniform_grid(t_lo, t_hi, n_points)?;
    let points = grid.par_iter().map(|&t| marker_point(ens, t)).collect();
    Ok(MarkerSeries {
        ensemble: ens.clone(),
        grid,
        points,
    })
}
