// SPDX-License-Identifier: Apache-2.0

//! Truncated Fock-space oracle.
//!
//! Each bath oscillator is represented on the number states `0..dim`. Its
//! conditional evolution under the central trajectory is built twice, by
//! direct time-ordered integration and by the displacement/Floquet closed
//! form, and the markers are evaluated from their trace and fidelity
//! definitions without using the analytic `η`.

mod closed_form;
mod convergence;
mod operator;
mod oracle;
mod propagate;
mod suite;

use num_complex::Complex64;
use thiserror::Error;

use crate::model::{Ensemble, EnvOscillator};

pub use closed_form::{closed_form_unitary, FloquetFactors};
pub use convergence::{truncation_convergence, truncation_convergence_up_to, ConvergenceReport, DIM_SCHEDULE};
pub use operator::{
    build_operators, displacement, free_propagator, thermal_populations, thermal_state, FockOperator,
    LadderOperators,
};
pub use oracle::{
    gamma_oracle, hermitian_sqrt, oracle_markers, overlap_oracle, OracleMarkers, CLAMP_THRESHOLD,
};
pub use propagate::{propagate, propagate_converged, suggested_steps, STEP_HALVING_TOL};
pub use suite::{
    construction_difference, draw_cases, run_case, run_case_at_dim, run_suite, CaseOutcome, DrawRanges, OracleCase,
    SuiteReport, GAMMA_TOL, OVERLAP_TOL, UNITARY_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("Fock dimension {0} is too small (need at least 2)")]
    DimensionTooSmall(usize),
    #[error("displacement {alpha} is too large for dimension {dim} (|alpha|^2 > dim/4)")]
    TruncationWarning { alpha: Complex64, dim: usize },
    #[error("step size not converged with {steps} steps (halving changed the result by {change:e})")]
    NonConvergedStepSize { steps: usize, change: f64 },
    #[error("closed form is singular inside the resonance window; use propagate")]
    ResonanceUnsupported,
    #[error("operator dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("density matrix has eigenvalue {0:e} below the clamp threshold")]
    NonPositiveDensity(f64),
    #[error("markers not converged at the largest dimension {dim} (last change {change:e})")]
    NotConvergedAtMaxDim { dim: usize, change: f64 },
}

/// One bath oscillator driven by one branch `Y cos(Ωt + φ)` of the central
/// trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrivenBranch {
    pub oscillator: EnvOscillator,
    pub omega_big: f64,
    pub y: f64,
    pub phi: f64,
}

impl DrivenBranch {
    /// The `Y` and `Y′` branches of oscillator `k` of an ensemble.
    pub fn pair(ens: &Ensemble, k: usize) -> (DrivenBranch, DrivenBranch) {
        let make = |y| DrivenBranch {
            oscillator: ens.oscillators[k],
            omega_big: ens.central.omega_big,
            y,
            phi: ens.trajectory.phi,
        };
        (make(ens.trajectory.y), make(ens.trajectory.y_prime))
    }
}
