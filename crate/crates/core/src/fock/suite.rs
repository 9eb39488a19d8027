// SPDX-License-Identifier: Apache-2.0

//! Seeded random-draw comparison of the analytic markers against the oracle.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    closed_form_unitary, oracle_markers, propagate_converged, truncation_convergence_up_to,
    DrivenBranch, FockOperator, OracleError, OracleMarkers,
};
use crate::markers::{decoherence_factor, floquet_alpha, generalized_overlap};
use crate::model::{CentralOscillator, Ensemble, EnvOscillator, ThermalBath, TrajectoryPair};

pub const GAMMA_TOL: f64 = 1e-6;
pub const OVERLAP_TOL: f64 = 1e-5;
pub const UNITARY_TOL: f64 = 1e-7;

/// Parameter box for the random draws.
#[derive(Debug, Clone, PartialEq)]
pub struct DrawRanges {
    pub omega_big: RangeInclusive<f64>,
    pub coupling_g: RangeInclusive<f64>,
    pub y: RangeInclusive<f64>,
    pub beta: RangeInclusive<f64>,
    pub ratio: RangeInclusive<f64>,
    /// Minimum `|ω/Ω − 1|`.
    pub min_detuning: f64,
    pub t: RangeInclusive<f64>,
    /// Largest `|Y α|` accepted at either end of the interval.
    pub max_displacement: f64,
}

impl Default for DrawRanges {
    fn default() -> Self {
        DrawRanges {
            omega_big: 1.0..=2.5,
            coupling_g: 0.0..=0.3,
            y: -1.0..=1.0,
            beta: 0.5..=5.0,
            ratio: 0.3..=3.0,
            min_detuning: 0.15,
            t: 0.2..=2.0,
            max_displacement: 1.0,
        }
    }
}

/// One single-oscillator ensemble evaluated at one time.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCase {
    pub ensemble: Ensemble,
    pub t: f64,
}

fn within_envelope(ens: &Ensemble, t: f64, limit: f64) -> bool {
    let osc = &ens.oscillators[0];
    let omega_big = ens.central.omega_big;
    let phi = ens.trajectory.phi;
    [ens.trajectory.y, ens.trajectory.y_prime].iter().all(|&y| {
        [0.0, t]
            .iter()
            .all(|&s| (y * floquet_alpha(osc, omega_big, phi, s)).norm() <= limit)
    })
}

/// `count` draws from `ranges`, redrawing any outside the displacement envelope.
pub fn draw_cases(seed: u64, count: usize, ranges: &DrawRanges) -> Vec<OracleCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    while cases.len() < count {
        let omega_big = rng.random_range(ranges.omega_big.clone());
        let ratio = loop {
            let r = rng.random_range(ranges.ratio.clone());
            if (r - 1.0).abs() >= ranges.min_detuning {
                break r;
            }
        };
        let ensemble = Ensemble {
            central: CentralOscillator {
                mass_m: 1.0,
                omega_big,
            },
            oscillators: vec![EnvOscillator {
                mass_m: 1.0,
                omega: ratio * omega_big,
                coupling_g: rng.random_range(ranges.coupling_g.clone()),
            }],
            bath: ThermalBath {
                beta: rng.random_range(ranges.beta.clone()),
            },
            trajectory: TrajectoryPair {
                y: rng.random_range(ranges.y.clone()),
                y_prime: rng.random_range(ranges.y.clone()),
                phi: rng.random_range(0.0..=std::f64::consts::FRAC_PI_2),
            },
        };
        let t = rng.random_range(ranges.t.clone());
        if within_envelope(&ensemble, t, ranges.max_displacement) {
            cases.push(OracleCase { ensemble, t });
        }
    }
    cases
}

/// `min_θ ‖A − e^{iθ} B‖` on the leading `dim/4` block.
///
/// The two constructions differ by a c-number phase, and truncation corrupts
/// their top levels differently, so only the low block is compared.
pub fn construction_difference(a: &FockOperator, b: &FockOperator) -> f64 {
    let keep = (a.dim().min(b.dim()) / 4).max(1);
    let (a, b) = (a.block(keep), b.block(keep));
    let overlap = (&b.adjoint() * &a).trace();
    let phase = if overlap.norm() > 0.0 {
        overlap / overlap.norm()
    } else {
        num_complex::Complex64::new(1.0, 0.0)
    };
    (a - b.scale(phase)).operator_norm()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub case: OracleCase,
    pub dim: usize,
    pub analytic_gamma_sq: f64,
    pub oracle_gamma_sq: f64,
    pub analytic_overlap: f64,
    pub oracle_overlap: f64,
    /// Largest construction difference over the two branches.
    pub construction_diff: f64,
}

impl CaseOutcome {
    pub fn gamma_error(&self) -> f64 {
        (self.analytic_gamma_sq - self.oracle_gamma_sq).abs()
    }

    pub fn overlap_error(&self) -> f64 {
        (self.analytic_overlap - self.oracle_overlap).abs()
    }

    pub fn passed(&self) -> bool {
        self.gamma_error() < GAMMA_TOL && self.overlap_error() < OVERLAP_TOL && self.construction_diff < UNITARY_TOL
    }
}

/// Compares analytic and oracle markers at the dimension chosen by
/// [`truncation_convergence_up_to`].
pub fn run_case(case: &OracleCase, target_tol: f64, max_dim: usize) -> Result<CaseOutcome, OracleError> {
    let report = truncation_convergence_up_to(&case.ensemble, 0, case.t, target_tol, max_dim)?;
    outcome(case, report.dim, report.markers)
}

/// Compares analytic and oracle markers at a fixed dimension, without a
/// convergence check.
pub fn run_case_at_dim(case: &OracleCase, dim: usize) -> Result<CaseOutcome, OracleError> {
    let markers = oracle_markers(&case.ensemble, 0, case.t, dim)?;
    outcome(case, dim, markers)
}

fn outcome(case: &OracleCase, dim: usize, markers: OracleMarkers) -> Result<CaseOutcome, OracleError> {
    let ens = &case.ensemble;
    let (branch_y, branch_yp) = DrivenBranch::pair(ens, 0);
    let mut construction_diff: f64 = 0.0;
    for branch in [branch_y, branch_yp] {
        let numeric = propagate_converged(&branch, case.t, dim)?;
        let closed = closed_form_unitary(&branch, case.t, dim)?;
        construction_diff = construction_diff.max(construction_difference(&closed, &numeric));
    }
    Ok(CaseOutcome {
        case: case.clone(),
        dim,
        analytic_gamma_sq: decoherence_factor(ens, case.t).total,
        oracle_gamma_sq: markers.gamma_sq,
        analytic_overlap: generalized_overlap(ens, case.t).total,
        oracle_overlap: markers.overlap,
        construction_diff,
    })
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub outcomes: Vec<Result<CaseOutcome, OracleError>>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| matches!(o, Ok(c) if c.passed()))
    }

    pub fn max_gamma_error(&self) -> f64 {
        self.successes().map(CaseOutcome::gamma_error).fold(0.0, f64::max)
    }

    pub fn max_overlap_error(&self) -> f64 {
        self.successes().map(CaseOutcome::overlap_error).fold(0.0, f64::max)
    }

    pub fn max_construction_diff(&self) -> f64 {
        self.successes().map(|c| c.construction_diff).fold(0.0, f64::max)
    }

    pub fn successes(&self) -> impl Iterator<Item = &CaseOutcome> {
        self.outcomes.iter().filter_map(|o| o.as_ref().ok())
    }
}

/// Runs every case; results are in input order.
pub fn run_suite(cases: &[OracleCase], target_tol: f64, max_dim: usize) -> SuiteReport {
    SuiteReport {
        outcomes: cases.par_iter().map(|c| run_case(c, target_tol, max_dim)).collect(),
    }
}
