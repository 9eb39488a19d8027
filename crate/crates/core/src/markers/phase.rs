// SPDX-License-Identifier: Apache-2.0

//! Dependence of `|η̄|²` on the trajectory phase.
//!
//! The extreme values of `|η̄|²` occur when `−e^{−iωt}v` is anti-parallel to
//! `v(0)`, with `|v(0)|² = (Ω²/ω² − 1) sin²φ + 1`. On `[0, π/2]` that
//! magnitude grows with `φ` when `Ω > ω` and shrinks when `Ω < ω`.

use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseExtremes {
    pub phi_at_max: f64,
    pub phi_at_min: f64,
    /// `Ω = ω`: `|v(0)|²` does not depend on `φ`.
    pub degenerate: bool,
    ratio_sq: f64,
}

impl PhaseExtremes {
    /// `|v(0)|² = (Ω²/ω² − 1) sin²φ + 1`.
    pub fn v0_mag_sq(&self, phi: f64) -> f64 {
        (self.ratio_sq - 1.0) * phi.sin().powi(2) + 1.0
    }
}

pub fn phase_extremes(omega: f64, omega_big: f64) -> PhaseExtremes {
    let ratio_sq = (omega_big / omega).powi(2);
    let (phi_at_max, phi_at_min, degenerate) = if omega_big > omega {
        (FRAC_PI_2, 0.0, false)
    } else if omega_big < omega {
        (0.0, FRAC_PI_2, false)
    } else {
        (0.0, 0.0, true)
    };
    PhaseExtremes {
        phi_at_max,
        phi_at_min,
        degenerate,
        ratio_sq,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_six_and_seven_orderings() {
        let up = phase_extremes(3f64.sqrt(), 5f64.sqrt());
        assert_eq!(up.phi_at_max, FRAC_PI_2);
        assert_eq!(up.phi_at_min, 0.0);
        let down = phase_extremes(5f64.sqrt(), 3f64.sqrt());
        assert_eq!(down.phi_at_max, 0.0);
        assert_eq!(down.phi_at_min, FRAC_PI_2);
    }

    #[test]
    fn equal_frequencies_are_flat() {
        let flat = phase_extremes(2.0, 2.0);
        assert!(flat.degenerate);
        for k in 0..=10 {
            let phi = FRAC_PI_2 * k as f64 / 10.0;
            assert!((flat.v0_mag_sq(phi) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn magnitude_matches_phasor() {
        let (w, big) = (1.3, 2.9);
        let ext = phase_extremes(w, big);
        for k in 0..=8 {
            let phi = FRAC_PI_2 * k as f64 / 8.0;
            let v0 = num_complex::Complex64::new(phi.cos(), big / w * phi.sin());
            assert!((ext.v0_mag_sq(phi) - v0.norm_sqr()).abs() < 1e-14);
        }
    }
}
