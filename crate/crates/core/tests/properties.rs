// SPDX-License-Identifier: Apache-2.0

//! Invariants of the closed-form markers and the fraction arithmetic over
//! random inputs.

use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use qbm_core::fraction::{rationalize, reduce_ratio, t_min};
use qbm_core::markers::{
    decoherence_factor, displacement_exponents, eta_bar, eta_bar_abs2_expansion, eta_complex,
    generalized_overlap, in_resonance_window, marker_exponent, marker_point, phase_extremes, MarkerKind,
};
use qbm_core::{CentralOscillator, Ensemble, EnvOscillator, ThermalBath, TrajectoryPair};

fn ensemble(omega_big: f64, omegas: &[f64], g: f64, beta: f64, y: f64, y_prime: f64, phi: f64) -> Ensemble {
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
                coupling_g: g,
            })
            .collect(),
        bath: ThermalBath { beta },
        trajectory: TrajectoryPair { y, y_prime, phi },
    }
}

prop_compose! {
    fn any_ensemble()(
        omega_big in 0.5f64..5.0,
        omegas in prop::collection::vec(0.5f64..5.0, 1..5),
        g in 0.05f64..1.0,
        beta in 0.1f64..10.0,
        y in -1.0f64..1.0,
        y_prime in -1.0f64..1.0,
        phi in 0.0f64..FRAC_PI_2,
    ) -> Ensemble {
        ensemble(omega_big, &omegas, g, beta, y, y_prime, phi)
    }
}

proptest! {
    #[test]
    fn log_markers_multiply_to_squared_displacement(ens in any_ensemble(), t in 0.0f64..30.0) {
        let per_osc: Vec<f64> = displacement_exponents(&ens, t).collect();
        for (k, x) in per_osc.iter().enumerate() {
            let mut single = ens.clone();
            single.oscillators = vec![ens.oscillators[k]];
            let ln_g = -marker_exponent(&single, MarkerKind::Decoherence, t);
            let ln_b = -marker_exponent(&single, MarkerKind::Overlap, t);
            prop_assert!((ln_g * ln_b - x * x).abs() <= 1e-12 * x * x + 1e-300);
        }
    }

    #[test]
    fn overlap_dominates_decoherence(ens in any_ensemble(), t in 0.0f64..30.0) {
        let p = marker_point(&ens, t);
        prop_assert!(p.overlap_total >= p.gamma_sq_total);
        for (b, g) in p.overlap_per_osc.iter().zip(&p.gamma_sq_per_osc) {
            prop_assert!(b >= g);
            prop_assert!(*g > 0.0 && *b <= 1.0);
        }
    }

    #[test]
    fn totals_are_products(ens in any_ensemble(), t in 0.0f64..30.0) {
        let g = decoherence_factor(&ens, t);
        let b = generalized_overlap(&ens, t);
        let pg: f64 = g.per_oscillator.iter().product();
        let pb: f64 = b.per_oscillator.iter().product();
        prop_assert!((g.total - pg).abs() <= 1e-12 * pg.max(1e-300));
        prop_assert!((b.total - pb).abs() <= 1e-12 * pb.max(1e-300));
    }

    #[test]
    fn markers_start_at_one(ens in any_ensemble()) {
        let p = marker_point(&ens, 0.0);
        prop_assert_eq!(p.gamma_sq_total, 1.0);
        prop_assert_eq!(p.overlap_total, 1.0);
    }

    #[test]
    fn common_shift_of_trajectories_is_invisible(ens in any_ensemble(), t in 0.0f64..30.0, shift in -3.0f64..3.0) {
        let mut moved = ens.clone();
        moved.trajectory.y += shift;
        moved.trajectory.y_prime += shift;
        let (a, b) = (marker_point(&ens, t), marker_point(&moved, t));
        prop_assert!((a.gamma_sq_total - b.gamma_sq_total).abs() <= 1e-12);
        prop_assert!((a.overlap_total - b.overlap_total).abs() <= 1e-12);
    }

    #[test]
    fn colder_bath_decoheres_less(ens in any_ensemble(), t in 0.0f64..30.0, factor in 1.1f64..5.0) {
        let mut colder = ens.clone();
        colder.bath.beta *= factor;
        prop_assert!(decoherence_factor(&colder, t).total >= decoherence_factor(&ens, t).total);
        prop_assert!(generalized_overlap(&colder, t).total <= generalized_overlap(&ens, t).total);
    }

    #[test]
    fn cosine_expansion_matches_direct(
        omega in 0.5f64..5.0,
        omega_big in 0.5f64..5.0,
        phi in 0.0f64..FRAC_PI_2,
        t in 0.0f64..20.0,
    ) {
        let direct = eta_bar(omega, omega_big, phi, t).norm_sqr();
        let scale = 1.0 + (omega_big / omega).powi(2);
        prop_assert!((eta_bar_abs2_expansion(omega, omega_big, phi, t) - direct).abs() <= 1e-13 * scale * (1.0 + t));
    }

    #[test]
    fn eta_bar_respects_triangle_bound(
        omega in 0.5f64..5.0,
        omega_big in 0.5f64..5.0,
        phi in 0.0f64..FRAC_PI_2,
        t in 0.0f64..50.0,
    ) {
        let r2 = (omega_big / omega).powi(2);
        prop_assert!(eta_bar(omega, omega_big, phi, t).norm_sqr() <= 4.0 * r2.max(1.0) * (1.0 + 1e-12));
    }

    #[test]
    fn initial_velocity_magnitude_is_monotone_in_phase(
        omega in 0.5f64..5.0,
        omega_big in 0.5f64..5.0,
        a in 0.0f64..FRAC_PI_2,
        b in 0.0f64..FRAC_PI_2,
    ) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let ext = phase_extremes(omega, omega_big);
        let (v_lo, v_hi) = (ext.v0_mag_sq(lo), ext.v0_mag_sq(hi));
        if omega_big > omega {
            prop_assert!(v_hi >= v_lo);
        } else {
            prop_assert!(v_hi <= v_lo);
        }
    }

    #[test]
    fn rationalize_recovers_small_fractions(p in 1u64..200, q in 1u64..200) {
        let want = reduce_ratio(p, q).unwrap();
        let got = rationalize(p as f64 / q as f64, 1000, 1e-12).unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn eta_vanishes_on_the_recurrence_lattice(p in 1u64..12, q in 1u64..12, phi in 0.0f64..FRAC_PI_2, n in 1u64..4) {
        let frac = reduce_ratio(p, q).unwrap();
        let omega_big = 1.3;
        let omega = omega_big * frac.value();
        prop_assume!(!in_resonance_window(omega, omega_big));
        let osc = EnvOscillator { mass_m: 1.0, omega, coupling_g: 1.0 };
        let t = n as f64 * t_min(omega_big, frac);
        let scale = 1.0 + t;
        prop_assert!(eta_complex(&osc, omega_big, phi, t).norm() <= 1e-10 * scale);
    }
}

#[test]
fn lattice_example_has_pi_period() {
    let frac = reduce_ratio(5, 7).unwrap();
    assert!((t_min(7.0, frac) - PI).abs() < 1e-15);
}
