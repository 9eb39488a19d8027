// SPDX-License-Identifier: Apache-2.0

//! Shared fixtures for the benchmarks.

use qbm_core::{CentralOscillator, Ensemble, EnvOscillator, ThermalBath, TrajectoryPair};

/// Unit-coupling ensemble around a central oscillator of frequency `omega_big`.
pub fn ensemble(omega_big: f64, omegas: &[f64]) -> Ensemble {
    Ensemble {
        central: CentralOscillator {
            mass_m: 1.0,
            omega_big,
        },
        oscillators: omegas
            .iter()
            .map(|&omega| EnvOscillator {
                mass_m: 1.0,
                omega,
                coupling_g: 1.0,
            })
            .collect(),
        bath: ThermalBath { beta: 1.0 },
        trajectory: TrajectoryPair {
            y: 1.0,
            y_prime: 0.0,
            phi: 0.0,
        },
    }
}
