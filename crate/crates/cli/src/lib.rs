// SPDX-License-Identifier: Apache-2.0

//! The `qbm` command line.
//!
//! Exit codes: 0 success, 1 numerical or validation failure, 2 usage or
//! configuration error, 3 oracle non-convergence.

mod commands;
mod error;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::CliError;
pub use output::{format_value, markers_csv, phase_label, phase_sweep_csv, series_columns, svg_plot};

#[derive(Debug, Parser)]
#[command(name = "qbm", version, about = "Objectivity markers of quantum Brownian motion in the recoilless limit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate both markers on a time grid and write CSV.
    Markers(MarkersArgs),
    /// Classify frequency relations and report the recurrence lattice.
    Fraction(FractionArgs),
    /// Compare the analytic markers with the Fock-space oracle.
    Oracle(OracleArgs),
    /// Write a built-in figure dataset as CSV.
    Figure(FigureArgs),
    /// Phase dependence of |eta_bar|^2 for one frequency pair.
    Phase(PhaseArgs),
}

#[derive(Debug, Args)]
pub struct MarkersArgs {
    /// Ensemble configuration (JSON).
    #[arg(long)]
    pub config: PathBuf,
    /// Output CSV path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write an SVG plot next to the CSV (requires --out).
    #[arg(long)]
    pub svg: bool,
    /// Number of grid points; default 40 per fastest period.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    /// Also report maxima of the total decoherence factor at or above this value.
    #[arg(long)]
    pub threshold: Option<f64>,
}

#[derive(Debug, Args)]
pub struct FractionArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// CSV report path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Largest denominator tried when rationalizing real frequencies.
    #[arg(long, default_value_t = 1000)]
    pub max_den: u64,
    /// Tolerance for accepting a rational approximation of a real ratio.
    #[arg(long, default_value_t = 1e-9)]
    pub eps: f64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Check the oscillators of this ensemble instead of random draws.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Evaluation time for --config cases.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub draws: usize,
    /// Largest Fock dimension of the convergence schedule.
    #[arg(long, default_value_t = 160)]
    pub max_dim: usize,
    /// Fixed Fock dimension, skipping the convergence schedule.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Marker change accepted by the convergence schedule.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    /// Table output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// fig1 to fig8, or one of the panels fig3a, fig3b, fig6b, fig7b.
    pub figure_id: String,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub svg: bool,
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Report recurrences of the total decoherence factor at or above this value.
    #[arg(long)]
    pub threshold: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PhaseArgs {
    /// Take the frequencies from the first oscillator of this ensemble.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, required_unless_present = "config")]
    pub omega: Option<f64>,
    #[arg(long, required_unless_present = "config")]
    pub omega_big: Option<f64>,
    #[arg(long, default_value_t = 50.0)]
    pub t_max: f64,
    #[arg(long)]
    pub grid: Option<usize>,
    /// CSV of |eta_bar|^2 per phase.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub svg: bool,
}

/// Applies `QBM_THREADS` (0 or unset: rayon's default).
fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("QBM_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("QBM_THREADS must be a non-negative integer, got {value:?}")))?;
    if threads > 0 {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    Ok(())
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Markers(args) => commands::markers::run(&args),
        Command::Fraction(args) => commands::fraction::run(&args),
        Command::Oracle(args) => commands::oracle::run(&args),
        Command::Figure(args) => commands::figure::run(&args),
        Command::Phase(args) => commands::phase::run(&args),
    }
}
