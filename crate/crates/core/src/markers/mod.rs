// SPDX-License-Identifier: Apache-2.0

//! Closed-form objectivity markers.
//!
//! For each bath oscillator the decoherence factor and generalized overlap are
//!
//! ```text
//! |Γ_k|² = exp(−coth(βω_k/2) ΔY² |η_k|²)
//! B_k    = exp(−tanh(βω_k/2) ΔY² |η_k|²)
//! ```
//!
//! and the ensemble values are their products. Totals are formed by summing
//! exponents and exponentiating once.

mod beating;
mod eta;
mod phase;

use thiserror::Error;

use crate::model::Ensemble;

pub use beating::{beating_envelope, eta_bar_abs2_expansion, BeatingEnvelope};
pub use eta::{
    eta, eta_bar, eta_complex, eta_near_resonance, eta_resonance_limit, floquet_alpha, floquet_r,
    floquet_shift, in_resonance_window, resonance_factor, EtaValue, RESONANCE_WINDOW,
};
pub use phase::{phase_extremes, PhaseExtremes};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MarkerError {
    #[error("zero detuning: the beating period is undefined")]
    DegenerateBeating,
}

/// Which of the two markers to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkerKind {
    /// `|Γ|²`, thermal weight `coth(βω/2)`.
    Decoherence,
    /// `B`, thermal weight `tanh(βω/2)`.
    Overlap,
}

impl MarkerKind {
    pub fn thermal_weight(self, lambda: f64) -> f64 {
        let th = (0.5 * lambda).tanh();
        match self {
            MarkerKind::Decoherence => 1.0 / th,
            MarkerKind::Overlap => th,
        }
    }
}

/// Per-oscillator values and their product.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkerValues {
    pub per_oscillator: Vec<f64>,
    pub total: f64,
}

/// Both markers at one time.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkerPoint {
    pub t: f64,
    pub gamma_sq_per_osc: Vec<f64>,
    pub overlap_per_osc: Vec<f64>,
    pub gamma_sq_total: f64,
    pub overlap_total: f64,
}

impl MarkerPoint {
    pub fn total(&self, kind: MarkerKind) -> f64 {
        match kind {
            MarkerKind::Decoherence => self.gamma_sq_total,
            MarkerKind::Overlap => self.overlap_total,
        }
    }

    pub fn per_oscillator(&self, kind: MarkerKind) -> &[f64] {
        match kind {
            MarkerKind::Decoherence => &self.gamma_sq_per_osc,
            MarkerKind::Overlap => &self.overlap_per_osc,
        }
    }
}

/// `ΔY² |η_k|²` for every oscillator.
pub fn displacement_exponents(ens: &Ensemble, t: f64) -> impl Iterator<Item = f64> + '_ {
    let dy2 = ens.trajectory.delta_y().powi(2);
    let phi = ens.trajectory.phi;
    let omega_big = ens.central.omega_big;
    ens.oscillators
        .iter()
        .map(move |osc| dy2 * eta_complex(osc, omega_big, phi, t).norm_sqr())
}

/// Summed exponent `Σ_k w_k ΔY² |η_k|²`; the total marker is `exp(−·)`.
pub fn marker_exponent(ens: &Ensemble, kind: MarkerKind, t: f64) -> f64 {
    displacement_exponents(ens, t)
        .zip(&ens.oscillators)
        .map(|(x, osc)| kind.thermal_weight(ens.bath.lambda(osc.omega)) * x)
        .sum()
}

fn marker_values(ens: &Ensemble, kind: MarkerKind, t: f64) -> MarkerValues {
    let exponents: Vec<f64> = displacement_exponents(ens, t)
        .zip(&ens.oscillators)
        .map(|(x, osc)| kind.thermal_weight(ens.bath.lambda(osc.omega)) * x)
        .collect();
    MarkerValues {
        total: (-exponents.iter().sum::<f64>()).exp(),
        per_oscillator: exponents.into_iter().map(|e| (-e).exp()).collect(),
    }
}

pub fn decoherence_factor(ens: &Ensemble, t: f64) -> MarkerValues {
    marker_values(ens, MarkerKind::Decoherence, t)
}

pub fn generalized_overlap(ens: &Ensemble, t: f64) -> MarkerValues {
    marker_values(ens, MarkerKind::Overlap, t)
}

pub fn marker_point(ens: &Ensemble, t: f64) -> MarkerPoint {
    let mut gamma_sq_per_osc = Vec::with_capacity(ens.oscillators.len());
    let mut overlap_per_osc = Vec::with_capacity(ens.oscillators.len());
    let (mut gamma_exp, mut overlap_exp) = (0.0, 0.0);
    for (x, osc) in displacement_exponents(ens, t).zip(&ens.oscillators) {
        let lambda = ens.bath.lambda(osc.omega);
        let g = MarkerKind::Decoherence.thermal_weight(lambda) * x;
        let b = MarkerKind::Overlap.thermal_weight(lambda) * x;
        gamma_exp += g;
        overlap_exp += b;
        gamma_sq_per_osc.push((-g).exp());
        overlap_per_osc.push((-b).exp());
    }
    MarkerPoint {
        t,
        gamma_sq_per_osc,
        overlap_per_osc,
        gamma_sq_total: (-gamma_exp).exp(),
        overlap_total: (-overlap_exp).exp(),
    }
}
