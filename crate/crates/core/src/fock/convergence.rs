// SPDX-License-Identifier: Apache-2.0

use super::{oracle_markers, OracleError, OracleMarkers};
use crate::model::Ensemble;

/// Dimensions tried, in order.
pub const DIM_SCHEDULE: [usize; 4] = [20, 40, 80, 160];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceReport {
    pub dim: usize,
    pub markers: OracleMarkers,
    /// Largest change of `|Γ|²` or `B` between `dim/2` and `dim`.
    pub change: f64,
}

/// Smallest `dim` of [`DIM_SCHEDULE`] whose markers differ from those at
/// `dim/2` by less than `target_tol`.
pub fn truncation_convergence(
    ens: &Ensemble,
    k: usize,
    t: f64,
    target_tol: f64,
) -> Result<ConvergenceReport, OracleError> {
    truncation_convergence_up_to(ens, k, t, target_tol, *DIM_SCHEDULE.last().unwrap())
}

/// As [`truncation_convergence`], stopping after `max_dim`.
pub fn truncation_convergence_up_to(
    ens: &Ensemble,
    k: usize,
    t: f64,
    target_tol: f64,
    max_dim: usize,
) -> Result<ConvergenceReport, OracleError> {
    assert!(target_tol > 0.0, "target_tol must be positive");
    let mut previous = oracle_markers(ens, k, t, DIM_SCHEDULE[0] / 2)?;
    let mut change = f64::INFINITY;
    let mut last_dim = DIM_SCHEDULE[0];
    for &dim in DIM_SCHEDULE.iter().take_while(|&&d| d <= max_dim) {
        let current = oracle_markers(ens, k, t, dim)?;
        change = (current.gamma_sq - previous.gamma_sq)
            .abs()
            .max((current.overlap - previous.overlap).abs());
        log::debug!("dim {dim}: marker change {change:e}");
        if change < target_tol {
            return Ok(ConvergenceReport {
                dim,
                markers: current,
                change,
            });
        }
        previous = current;
        last_dim = dim;
    }
    Err(OracleError::NotConvergedAtMaxDim { dim: last_dim, change })
}
