// SPDX-License-Identifier: Apache-2.0

use qbm_core::markers::phase_extremes;
use qbm_core::scan::{phase_sweep, uniform_grid};

use super::load;
use crate::output::{format_value, phase_label, phase_sweep_csv, svg_plot};
use crate::{CliError, PhaseArgs};

pub fn run(args: &PhaseArgs) -> Result<u8, CliError> {
    let (omega, omega_big) = match &args.config {
        Some(path) => {
            let (_, ens) = load(path)?;
            (ens.oscillators[0].omega, ens.central.omega_big)
        }
        None => (args.omega.unwrap_or(f64::NAN), args.omega_big.unwrap_or(f64::NAN)),
    };
    if !(omega > 0.0 && omega_big > 0.0 && omega.is_finite() && omega_big.is_finite()) {
        return Err(CliError::Usage("frequencies must be positive and finite".into()));
    }
    let n = args
        .grid
        .unwrap_or_else(|| ((args.t_max * (omega + omega_big) / std::f64::consts::TAU * 40.0).ceil() as usize).max(2));
    let grid = uniform_grid(0.0, args.t_max, n)?;
    let sweep = phase_sweep(omega, omega_big, &grid);

    let ext = phase_extremes(omega, omega_big);
    if ext.degenerate {
        println!("Omega = omega: |eta_bar|^2 does not depend on phi");
    } else {
        println!(
            "|eta_bar|^2 is largest at phi = {} and smallest at phi = {}",
            format_value(ext.phi_at_max),
            format_value(ext.phi_at_min)
        );
    }
    let bound = 4.0 * (omega_big / omega).powi(2).max(1.0);
    println!("phi,sup_eta_bar2,v0_mag_sq");
    for (phi, sup) in sweep.phis.iter().zip(&sweep.sup) {
        println!("{},{},{}", format_value(*phi), format_value(*sup), format_value(ext.v0_mag_sq(*phi)));
    }
    println!("bound 4*max(1, Omega^2/omega^2) = {}", format_value(bound));

    if let Some(out) = &args.out {
        std::fs::write(out, phase_sweep_csv(&sweep))?;
        if args.svg {
            let cols: Vec<_> = sweep
                .phis
                .iter()
                .zip(&sweep.eta_bar_abs2)
                .map(|(&phi, col)| (format!("eta_bar2_{}", phase_label(phi)), col.clone()))
                .collect();
            std::fs::write(out.with_extension("svg"), svg_plot("phase sweep", &sweep.grid, &cols))?;
        }
    }
    Ok(0)
}
