// SPDX-License-Identifier: Apache-2.0

//! The displacement amplitude `η_k(t)` that drives both markers.
//!
//! Direct form, with `v(t) = cos(Ωt+φ) + i (Ω/ω) sin(Ωt+φ)`:
//!
//! ```text
//! η = g Q η̄,   η̄ = −e^{−iωt} v(t) + v(0),   Q = √(ω/2m) / (ω² − Ω²)
//! ```
//!
//! `Q` carries the sign of `ω² − Ω²`, so `η` is analytic through `ω = Ω`.
//! Near resonance `Q` diverges while `η̄ → 0`; inside a relative window of
//! [`RESONANCE_WINDOW`] the first-order expansion in `ω − Ω` is used instead.

use num_complex::Complex64;

use crate::model::{CentralOscillator, EnvOscillator};

/// Relative detuning `|ω/Ω − 1|` below which the expansion branch is used.
pub const RESONANCE_WINDOW: f64 = 1e-4;

/// `η_k` together with the factors it is assembled from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaValue {
    pub value: Complex64,
    /// Signed resonant factor; infinite exactly at `ω = Ω`.
    pub q_factor: f64,
    pub eta_bar: Complex64,
}

/// `v(t)` for the trajectory phase `φ`.
pub(crate) fn trajectory_phasor(ratio: f64, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    let (s, c) = (omega_big * t + phi).sin_cos();
    Complex64::new(c, ratio * s)
}

/// `η̄ = −e^{−iωt} v(t) + v(0)`. Depends on the coupling only through `ω/Ω`.
pub fn eta_bar(omega: f64, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    let ratio = omega_big / omega;
    let v = trajectory_phasor(ratio, omega_big, phi, t);
    let v0 = trajectory_phasor(ratio, omega_big, phi, 0.0);
    -Complex64::from_polar(1.0, -omega * t) * v + v0
}

/// Signed `Q = √(ω/2m) / (ω² − Ω²)`; its magnitude is the usual resonant factor.
pub fn resonance_factor(osc: &EnvOscillator, omega_big: f64) -> f64 {
    (osc.omega / (2.0 * osc.mass_m)).sqrt() / (osc.omega * osc.omega - omega_big * omega_big)
}

/// `R = 1 / (m (ω² − Ω²))`, the particular-solution amplitude of the drive.
pub fn floquet_r(osc: &EnvOscillator, omega_big: f64) -> f64 {
    1.0 / (osc.mass_m * (osc.omega * osc.omega - omega_big * omega_big))
}

/// Kick amplitude `α(t) = g R √(mω/2) (cos(Ωt+φ) + i (Ω/ω) sin(Ωt+φ))`.
///
/// `η = −e^{−iωt} α(t) + α(0)` off resonance.
pub fn floquet_alpha(osc: &EnvOscillator, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    let scale = osc.coupling_g * floquet_r(osc, omega_big) * (osc.mass_m * osc.omega / 2.0).sqrt();
    trajectory_phasor(omega_big / osc.omega, omega_big, phi, t) * scale
}

/// Floquet energy shift `¼ Y² g² R`.
pub fn floquet_shift(osc: &EnvOscillator, omega_big: f64, y: f64) -> f64 {
    0.25 * y * y * osc.coupling_g * osc.coupling_g * floquet_r(osc, omega_big)
}

pub fn in_resonance_window(omega: f64, omega_big: f64) -> bool {
    (omega / omega_big - 1.0).abs() < RESONANCE_WINDOW
}

/// `η` by the branch appropriate for the detuning.
pub fn eta_complex(osc: &EnvOscillator, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    if in_resonance_window(osc.omega, omega_big) {
        eta_near_resonance(osc, omega_big, phi, t)
    } else {
        let q = resonance_factor(osc, omega_big);
        eta_bar(osc.omega, omega_big, phi, t) * (osc.coupling_g * q)
    }
}

pub fn eta(osc: &EnvOscillator, central: &CentralOscillator, phi: f64, t: f64) -> EtaValue {
    let omega_big = central.omega_big;
    EtaValue {
        value: eta_complex(osc, omega_big, phi, t),
        q_factor: resonance_factor(osc, omega_big),
        eta_bar: eta_bar(osc.omega, omega_big, phi, t),
    }
}

/// First-order expansion of `η` in `ω − Ω`, with `s = sin(Ωt+φ)` and
/// `κ = s e^{−iΩt} − sin φ`:
///
/// ```text
/// η ≈ g √(ω/2m) / (ω+Ω) · [ η̄′(Ω) + ½ η̄″(Ω) (ω − Ω) ]
/// η̄′(Ω) = i t e^{iφ} + (i/Ω) κ
/// η̄″(Ω) = t² e^{iφ} + (2t/Ω) s e^{−iΩt} − (2i/Ω²) κ
/// ```
pub fn eta_near_resonance(osc: &EnvOscillator, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    let i = Complex64::i();
    let e_phi = Complex64::from_polar(1.0, phi);
    let swing = Complex64::from_polar((omega_big * t + phi).sin(), -omega_big * t);
    let kick = swing - phi.sin();
    let first = i * t * e_phi + i * kick / omega_big;
    let second = t * t * e_phi + 2.0 * t * swing / omega_big - 2.0 * i * kick / (omega_big * omega_big);
    let detuning = osc.omega - omega_big;
    let prefactor = osc.coupling_g * (osc.omega / (2.0 * osc.mass_m)).sqrt() / (osc.omega + omega_big);
    (first + 0.5 * second * detuning) * prefactor
}

/// `lim_{ω→Ω} η = i g √(1/(8mΩ³)) [e^{−iΩt} sin(Ωt+φ) − sin φ + Ωt e^{iφ}]`.
///
/// The secular term enters with a plus sign: `∂_ω e^{−iωt} = −it e^{−iωt}`
/// and `η̄` carries a leading minus.
pub fn eta_resonance_limit(g: f64, m: f64, omega_big: f64, phi: f64, t: f64) -> Complex64 {
    let bracket = Complex64::from_polar((omega_big * t + phi).sin(), -omega_big * t)
        - phi.sin()
        + Complex64::from_polar(omega_big * t, phi);
    Complex64::i() * g * (1.0 / (8.0 * m * omega_big.powi(3))).sqrt() * bracket
}
