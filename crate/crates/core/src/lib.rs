// SPDX-License-Identifier: Apache-2.0

//! Objectivity markers for quantum Brownian motion in the recoilless limit.
//!
//! A central oscillator follows its classical trajectory `Y cos(Ωt + φ)` and
//! drives a bath of independent harmonic oscillators. Each bath oscillator
//! contributes a decoherence factor `exp(-coth(βω/2) ΔY² |η|²)` and a
//! generalized overlap `exp(-tanh(βω/2) ΔY² |η|²)`; the ensemble markers are
//! their products.
//!
//! Modules:
//!
//! - [`model`]: parameter types and validation, plus the JSON configuration.
//! - [`markers`]: closed-form `η`, the two markers, beating envelope,
//!   resonance limit and phase analysis.
//! - [`fraction`]: rational frequency relations and the non-objectivity
//!   time lattice.
//! - [`fock`]: truncated Fock-space oracle (two unitary constructions, trace
//!   and Uhlmann-fidelity evaluation of the markers).
//! - [`scan`]: time-grid evaluation, recurrence detection and figure datasets.

pub mod config;
pub mod fock;
pub mod fraction;
pub mod markers;
pub mod model;
pub mod scan;

pub use num_complex::Complex64;

pub use crate::fraction::{FrequencyRelation, Parity, ReducedFraction};
pub use crate::markers::{BeatingEnvelope, EtaValue, MarkerPoint};
pub use crate::model::{
    CentralOscillator, EnvOscillator, Ensemble, ModelError, ThermalBath, TrajectoryPair,
};
pub use crate::scan::{MarkerSeries, RecurrenceReport};
