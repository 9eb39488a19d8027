// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write;

use qbm_core::fock::{
    draw_cases, run_case_at_dim, run_suite, thermal_populations, CaseOutcome, DrawRanges, OracleCase,
    OracleError, SuiteReport, GAMMA_TOL, OVERLAP_TOL, UNITARY_TOL,
};
use qbm_core::markers::floquet_alpha;
use qbm_core::Ensemble;
use rayon::prelude::*;

use super::{emit, load};
use crate::output::format_value;
use crate::{CliError, OracleArgs};

fn config_cases(ens: &Ensemble, t: f64) -> Vec<OracleCase> {
    ens.oscillators
        .iter()
        .map(|&osc| OracleCase {
            ensemble: Ensemble {
                oscillators: vec![osc],
                ..ens.clone()
            },
            t,
        })
        .collect()
}

/// Why a fixed-dimension case might be truncation-limited.
fn truncation_diagnosis(case: &OracleCase, dim: usize) -> String {
    let ens = &case.ensemble;
    let osc = &ens.oscillators[0];
    let lambda = ens.bath.lambda(osc.omega);
    let top = thermal_populations(lambda, dim)[dim - 1];
    let occupancy = 1.0 / lambda.exp_m1();
    let kick = [ens.trajectory.y, ens.trajectory.y_prime]
        .iter()
        .flat_map(|&y| {
            [0.0, case.t]
                .map(|s| (y * floquet_alpha(osc, ens.central.omega_big, ens.trajectory.phi, s)).norm_sqr())
        })
        .fold(0.0, f64::max);
    format!(
        "truncation at dim={dim}: mean thermal occupancy {occupancy:.3}, population of the top level {top:.3e}, \
         largest |Y alpha|^2 {kick:.3e}; increase --dim or drop it to use the convergence schedule"
    )
}

fn row(i: usize, o: &CaseOutcome) -> String {
    let e = &o.case.ensemble;
    let osc = &e.oscillators[0];
    let fields = [
        e.central.omega_big,
        osc.omega,
        osc.coupling_g,
        e.bath.beta,
        e.trajectory.y,
        e.trajectory.y_prime,
        e.trajectory.phi,
        o.case.t,
    ];
    let mut line = i.to_string();
    for v in fields {
        line.push(',');
        line.push_str(&format_value(v));
    }
    write!(line, ",{}", o.dim).unwrap();
    for v in [
        o.analytic_gamma_sq,
        o.oracle_gamma_sq,
        o.gamma_error(),
        o.analytic_overlap,
        o.oracle_overlap,
        o.overlap_error(),
        o.construction_diff,
    ] {
        line.push(',');
        line.push_str(&format_value(v));
    }
    line.push_str(if o.passed() { ",PASS" } else { ",FAIL" });
    line
}

pub fn run(args: &OracleArgs) -> Result<u8, CliError> {
    if !(args.tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let cases = match &args.config {
        Some(path) => config_cases(&load(path)?.1, args.t),
        None => draw_cases(args.seed, args.draws, &DrawRanges::default()),
    };
    let report = match args.dim {
        Some(dim) => SuiteReport {
            outcomes: cases.par_iter().map(|c| run_case_at_dim(c, dim)).collect(),
        },
        None => run_suite(&cases, args.tol, args.max_dim),
    };

    let mut table = String::from(
        "case,omega_big,omega,g,beta,y,y_prime,phi,t,dim,gamma2_analytic,gamma2_oracle,gamma2_err,\
         overlap_analytic,overlap_oracle,overlap_err,construction_diff,status\n",
    );
    let mut not_converged = false;
    let mut other_error = false;
    let mut diagnoses = Vec::new();
    for (i, (case, outcome)) in cases.iter().zip(&report.outcomes).enumerate() {
        match outcome {
            Ok(o) => {
                table.push_str(&row(i, o));
                table.push('\n');
                if !o.passed() {
                    if let Some(dim) = args.dim {
                        diagnoses.push(format!("case {i}: {}", truncation_diagnosis(case, dim)));
                    }
                }
            }
            Err(err) => {
                not_converged |= matches!(
                    err,
                    OracleError::NotConvergedAtMaxDim { .. } | OracleError::NonConvergedStepSize { .. }
                );
                other_error = true;
                diagnoses.push(format!("case {i}: {err}"));
            }
        }
    }
    emit(args.out.as_deref(), &table)?;

    let passed = report.all_passed();
    eprintln!(
        "{}: {} case(s), max |dGamma^2| {:.3e} (tol {GAMMA_TOL:e}), max |dB| {:.3e} (tol {OVERLAP_TOL:e}), \
         max construction difference {:.3e} (tol {UNITARY_TOL:e})",
        if passed { "PASS" } else { "FAIL" },
        cases.len(),
        report.max_gamma_error(),
        report.max_overlap_error(),
        report.max_construction_diff()
    );
    for d in &diagnoses {
        eprintln!("  {d}");
    }
    Ok(if not_converged {
        3
    } else if passed && !other_error {
        0
    } else {
        1
    })
}
