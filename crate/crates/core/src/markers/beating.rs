// SPDX-License-Identifier: Apache-2.0

//! Cosine decomposition of `|η̄|²` and the slow beating envelope.
//!
//! With `r = Ω/ω`,
//!
//! ```text
//! |η̄|² = −½(1+r)² cos((Ω−ω)t) − ½(1−r²) cos((Ω−ω)t + 2φ)
//!        −½(1−r)² cos((Ω+ω)t) − ½(1−r²) cos((Ω+ω)t + 2φ)
//!        + 1 + r² + ½(1−r²)[cos 2(Ωt+φ) + cos 2φ]
//! ```
//!
//! The first two terms combine into `D cos(Δω t − ξ)`, `Δω = |Ω − ω|`.

use std::f64::consts::PI;

use super::MarkerError;

/// `|η̄|²` from its five-cosine expansion.
pub fn eta_bar_abs2_expansion(omega: f64, omega_big: f64, phi: f64, t: f64) -> f64 {
    let r = omega_big / omega;
    let minus = (omega_big - omega) * t;
    let plus = (omega_big + omega) * t;
    let cross = 1.0 - r * r;
    -0.5 * (1.0 + r).powi(2) * minus.cos() - 0.5 * cross * (minus + 2.0 * phi).cos()
        - 0.5 * (1.0 - r).powi(2) * plus.cos()
        - 0.5 * cross * (plus + 2.0 * phi).cos()
        + 1.0
        + r * r
        + 0.5 * cross * ((2.0 * (omega_big * t + phi)).cos() + (2.0 * phi).cos())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeatingEnvelope {
    pub delta_omega: f64,
    pub amplitude_d: f64,
    /// Phase such that the beating term is `D cos(Δω t − ξ)`, in `(−π, π]`.
    pub phase_xi: f64,
    /// `1 + Ω²/ω²`.
    pub constant_offset: f64,
}

impl BeatingEnvelope {
    pub fn period(&self) -> f64 {
        2.0 * PI / self.delta_omega
    }

    /// `D cos(Δω t − ξ)`.
    pub fn beating_term(&self, t: f64) -> f64 {
        self.amplitude_d * (self.delta_omega * t - self.phase_xi).cos()
    }

    /// The slow profile `1 + Ω²/ω² + D cos(Δω t − ξ)` around which the fast
    /// `Ω+ω` and `2Ω` terms oscillate.
    pub fn profile(&self, t: f64) -> f64 {
        self.constant_offset + self.beating_term(t)
    }

    /// First time `t ≥ 0` at which the profile peaks.
    pub fn first_peak(&self) -> f64 {
        self.phase_xi.rem_euclid(2.0 * PI) / self.delta_omega
    }
}

/// Closed-form `(Δω, D, ξ)` for the beating part of `|η̄|²`.
pub fn beating_envelope(omega: f64, omega_big: f64, phi: f64) -> Result<BeatingEnvelope, MarkerError> {
    let detuning = omega_big - omega;
    if detuning == 0.0 {
        return Err(MarkerError::DegenerateBeating);
    }
    let r = omega_big / omega;
    let a = (1.0 + r).powi(2);
    let b = 1.0 - r * r;
    let radicand = 2.0 * a * b * (2.0 * phi).cos() + a * a + b * b;
    let amplitude_d = 0.5 * radicand.max(0.0).sqrt();
    // D cos ξ and D sin ξ for the signed detuning, written against |Ω − ω|.
    let d_cos = -0.5 * (a + b * (2.0 * phi).cos());
    let d_sin = 0.5 * b * (2.0 * phi).sin() * detuning.signum();
    let mut phase_xi = d_sin.atan2(d_cos);
    if phase_xi <= -PI {
        phase_xi += 2.0 * PI;
    }
    Ok(BeatingEnvelope {
        delta_omega: detuning.abs(),
        amplitude_d,
        phase_xi,
        constant_offset: 1.0 + r * r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markers::eta::eta_bar;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn expansion_vanishes_at_start() {
        for &(w, big, phi) in &[(3.9, 4.0, 0.0), (1.0, 2.0, 0.3), (5.0, 2.0, FRAC_PI_2)] {
            assert!(eta_bar_abs2_expansion(w, big, phi, 0.0).abs() < 1e-14);
        }
    }

    #[test]
    fn expansion_matches_direct_modulus() {
        let mut k = 0u32;
        for &w in &[0.4, 1.0, 2.5, 3.9] {
            for &big in &[0.7, 2.0, 4.0] {
                for &phi in &[0.0, 0.3, 1.1, FRAC_PI_2] {
                    k += 1;
                    let t = 0.731 * k as f64;
                    let direct = eta_bar(w, big, phi, t).norm_sqr();
                    let expanded = eta_bar_abs2_expansion(w, big, phi, t);
                    assert!((direct - expanded).abs() < 1e-12, "{w} {big} {phi} {t}");
                }
            }
        }
    }

    #[test]
    fn fig1_period() {
        let env = beating_envelope(3.9, 4.0, 0.0).unwrap();
        assert!((env.delta_omega - 0.1).abs() < 1e-12);
        assert!((env.period() - 62.83185307179586).abs() < 1e-8);
    }

    #[test]
    fn fig1_profile_peaks_at_half_period() {
        let env = beating_envelope(3.9, 4.0, 0.0).unwrap();
        let half = PI / env.delta_omega;
        assert!((env.first_peak() - half).abs() < 1e-9);
        assert!((env.profile(half) - (env.constant_offset + env.amplitude_d)).abs() < 1e-12);
        // The fast terms only shift the sampled maximum of |η̄|² by a fraction
        // of the envelope width.
        let n = 200_000;
        let (t_max, _) = (0..n)
            .map(|i| i as f64 * env.period() / n as f64)
            .map(|t| (t, eta_bar(3.9, 4.0, 0.0, t).norm_sqr()))
            .fold((0.0, f64::MIN), |acc, p| if p.1 > acc.1 { p } else { acc });
        assert!((t_max - half).abs() < 2.0, "{t_max} vs {half}");
    }

    #[test]
    fn zero_detuning_is_degenerate() {
        assert_eq!(
            beating_envelope(2.0, 2.0, 0.3).unwrap_err(),
            MarkerError::DegenerateBeating
        );
    }

    // At cos 2φ = −1 the radicand is [(1+r)² − (1−r²)]², so D = r(1+r).
    #[test]
    fn quarter_phase_amplitude() {
        for &(w, big) in &[(3.9, 4.0), (1.0, 3.0), (5.0, 2.0)] {
            let r: f64 = big / w;
            let env = beating_envelope(w, big, FRAC_PI_2).unwrap();
            assert!((env.amplitude_d - r * (1.0 + r)).abs() < 1e-12);
        }
    }

    #[test]
    fn beating_term_reproduces_slow_cosines() {
        for &(w, big, phi) in &[(3.9, 4.0, 0.4), (4.1, 4.0, 1.0), (1.0, 2.0, 0.2)] {
            let env = beating_envelope(w, big, phi).unwrap();
            let r = big / w;
            for k in 0..50 {
                let t = 1.7 * k as f64;
                let x = (big - w) * t;
                let slow = -0.5 * (1.0 + r).powi(2) * x.cos() - 0.5 * (1.0 - r * r) * (x + 2.0 * phi).cos();
                assert!((env.beating_term(t) - slow).abs() < 1e-12);
            }
        }
    }
}
