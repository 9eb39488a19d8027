// SPDX-License-Identifier: Apache-2.0

//! Closed-form conditional unitary from the Floquet solution of the driven
//! oscillator:
//!
//! ```text
//! U_Y(t) = D(−Y α̃(t)) · D(Y e^{−iωt} α̃(0)) · exp(−i (H₀ + ¼ Y² g² R) t),   α̃ = −α*
//! ```
//!
//! with `α` from [`floquet_alpha`]. The composition reproduces
//! `−Y(α̃(t) − e^{−iωt} α̃(0))`, whose modulus is `|Y η|`.

use num_complex::Complex64;

use super::{displacement, free_propagator, DrivenBranch, FockOperator, OracleError};
use crate::markers::{floquet_alpha, floquet_shift, in_resonance_window};

/// The three ingredients of the closed-form unitary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetFactors {
    /// Coefficient of the outer displacement, `−Y α̃(t)`.
    pub k_y_displacement: Complex64,
    /// Coefficient of the inner displacement, `Y e^{−iωt} α̃(0)`.
    pub heisenberg_displacement: Complex64,
    /// Quasi-energy shift `¼ Y² g² R`.
    pub floquet_phase_shift: f64,
}

impl FloquetFactors {
    pub fn new(branch: &DrivenBranch, t: f64) -> Result<Self, OracleError> {
        let osc = &branch.oscillator;
        if in_resonance_window(osc.omega, branch.omega_big) {
            return Err(OracleError::ResonanceUnsupported);
        }
        let tilde = |s: f64| -floquet_alpha(osc, branch.omega_big, branch.phi, s).conj();
        Ok(FloquetFactors {
            k_y_displacement: -branch.y * tilde(t),
            heisenberg_displacement: branch.y * Complex64::from_polar(1.0, -osc.omega * t) * tilde(0.0),
            floquet_phase_shift: floquet_shift(osc, branch.omega_big, branch.y),
        })
    }

    /// Net displacement, equal to `Y η` up to sign and conjugation.
    pub fn net_displacement(&self) -> Complex64 {
        self.k_y_displacement + self.heisenberg_displacement
    }
}

pub fn closed_form_unitary(branch: &DrivenBranch, t: f64, dim: usize) -> Result<FockOperator, OracleError> {
    let factors = FloquetFactors::new(branch, t)?;
    let outer = displacement(factors.k_y_displacement, dim)?;
    let inner = displacement(factors.heisenberg_displacement, dim)?;
    let free = free_propagator(branch.oscillator.omega, factors.floquet_phase_shift, t, dim);
    Ok(&(&outer * &inner) * &free)
}
