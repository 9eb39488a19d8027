// SPDX-License-Identifier: Apache-2.0

use super::{default_grid_points, detect_recurrences, marker_series, ScanError};
use crate::markers::beating_envelope;
use crate::model::{CentralOscillator, Ensemble, EnvOscillator, ThermalBath, TrajectoryPair};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeCheck {
    /// Mean spacing of successive near-1 recurrences.
    pub measured_period: f64,
    /// `2π/|Ω − ω|`.
    pub predicted_period: f64,
    pub recurrences: usize,
}

impl EnvelopeCheck {
    pub fn relative_mismatch(&self) -> f64 {
        (self.measured_period - self.predicted_period).abs() / self.predicted_period
    }
}

/// Compares the recurrence spacing of a single oscillator's decoherence
/// factor on `[0, t_hi]` with the beating period.
///
/// A maximum counts as near-1 when its distance from 1 is within 1% of the
/// marker's full swing on the window; maxima closer together than a quarter
/// of the predicted period are merged into the best of them.
pub fn envelope_check(omega: f64, omega_big: f64, phi: f64, t_hi: f64) -> Result<EnvelopeCheck, ScanError> {
    let predicted_period = beating_envelope(omega, omega_big, phi)?.period();
    let ens = Ensemble::single(
        CentralOscillator {
            mass_m: 1.0,
            omega_big,
        },
        EnvOscillator {
            mass_m: 1.0,
            omega,
            coupling_g: 1.0,
        },
        ThermalBath { beta: 1.0 },
        TrajectoryPair {
            y: 1.0,
            y_prime: 0.0,
            phi,
        },
    );
    let series = marker_series(&ens, 0.0, t_hi, default_grid_points(&ens, 0.0, t_hi))?;
    let floor = series
        .points
        .iter()
        .map(|p| p.gamma_sq_total)
        .fold(1.0, f64::min);
    let report = detect_recurrences(&series, 1.0 - 0.01 * (1.0 - floor));

    let mut peaks: Vec<(f64, f64)> = Vec::new();
    for (&t, &v) in report.hit_times.iter().zip(&report.hit_values) {
        match peaks.last_mut() {
            Some(last) if t - last.0 < 0.25 * predicted_period => {
                if v > last.1 {
                    *last = (t, v);
                }
            }
            _ => peaks.push((t, v)),
        }
    }
    if peaks.len() < 2 {
        return Err(ScanError::TooFewRecurrences(peaks.len()));
    }
    let span = peaks[peaks.len() - 1].0 - peaks[0].0;
    Ok(EnvelopeCheck {
        measured_period: span / (peaks.len() - 1) as f64,
        predicted_period,
        recurrences: peaks.len(),
    })
}
