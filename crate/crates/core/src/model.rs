// SPDX-License-Identifier: Apache-2.0

//! Parameter types shared by every other module.
//!
//! Natural units throughout: ħ = k_B = 1, so `λ = βω` is dimensionless.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("parameter `{0}` must be positive and finite")]
    NonPositiveParameter(&'static str),
    #[error("parameter `{0}` must be finite")]
    NonFiniteParameter(&'static str),
    #[error("the environment contains no oscillators")]
    EmptyEnvironment,
    #[error("trajectory phase {0} is outside [0, π/2]")]
    PhiOutOfRange(f64),
}

/// The system oscillator: mass `M` and angular frequency `Ω`.
///
/// `M` never enters the recoilless markers; it is kept so configurations
/// describe the full model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CentralOscillator {
    #[serde(rename = "mass_M")]
    pub mass_m: f64,
    pub omega_big: f64,
}

/// One bath oscillator with mass `m_k`, frequency `ω_k` and coupling `g_k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvOscillator {
    pub mass_m: f64,
    pub omega: f64,
    pub coupling_g: f64,
}

/// Classical branch amplitudes `Y`, `Y′` and the trajectory phase `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPair {
    pub y: f64,
    pub y_prime: f64,
    pub phi: f64,
}

impl TrajectoryPair {
    /// `ΔY = Y − Y′`, the only combination entering the markers.
    pub fn delta_y(&self) -> f64 {
        self.y - self.y_prime
    }
}

/// A single bath temperature, as inverse temperature `β`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalBath {
    pub beta: f64,
}

impl ThermalBath {
    /// `λ_k = β ω_k`.
    pub fn lambda(&self, omega: f64) -> f64 {
        self.beta * omega
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ensemble {
    pub central: CentralOscillator,
    pub oscillators: Vec<EnvOscillator>,
    pub bath: ThermalBath,
    pub trajectory: TrajectoryPair,
}

fn positive(value: f64, name: &'static str) -> Result<(), ModelError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(ModelError::NonPositiveParameter(name))
    }
}

fn finite(value: f64, name: &'static str) -> Result<(), ModelError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ModelError::NonFiniteParameter(name))
    }
}

impl CentralOscillator {
    pub fn validate(&self) -> Result<(), ModelError> {
        positive(self.mass_m, "mass_M")?;
        positive(self.omega_big, "omega_big")
    }
}

impl EnvOscillator {
    pub fn validate(&self) -> Result<(), ModelError> {
        positive(self.mass_m, "mass_m")?;
        positive(self.omega, "omega")?;
        finite(self.coupling_g, "coupling_g")
    }
}

impl Ensemble {
    /// A single-oscillator ensemble, the common case in tests and figures.
    pub fn single(
        central: CentralOscillator,
        oscillator: EnvOscillator,
        bath: ThermalBath,
        trajectory: TrajectoryPair,
    ) -> Self {
        Ensemble {
            central,
            oscillators: vec![oscillator],
            bath,
            trajectory,
        }
    }

    /// Checks every type invariant and hands the ensemble back unchanged.
    pub fn validate(self) -> Result<Ensemble, ModelError> {
        self.central.validate()?;
        if self.oscillators.is_empty() {
            return Err(ModelError::EmptyEnvironment);
        }
        for osc in &self.oscillators {
            osc.validate()?;
        }
        positive(self.bath.beta, "beta")?;
        finite(self.trajectory.y, "y")?;
        finite(self.trajectory.y_prime, "y_prime")?;
        let phi = self.trajectory.phi;
        if !(0.0..=FRAC_PI_2).contains(&phi) {
            return Err(ModelError::PhiOutOfRange(phi));
        }
        Ok(self)
    }
}
