// SPDX-License-Identifier: Apache-2.0

//! Built-in datasets for the standard parameter sets.
//!
//! Parameters not fixed by the setups themselves default to
//! `g = m = M = β = 1`, `Y = 1`, `Y′ = 0`, `φ = 0`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{default_grid_points, marker_series, uniform_grid, MarkerSeries, ScanError};
use crate::fraction::{common_recurrence, reduce_ratio};
use crate::markers::eta_bar;
use crate::model::{CentralOscillator, Ensemble, EnvOscillator, ThermalBath, TrajectoryPair};

/// Trajectory phases of the φ-sweep datasets.
pub const PHASE_GRID: [f64; 5] = [0.0, FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_8, FRAC_PI_2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3a,
    Fig3b,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig6b,
    Fig7b,
    Fig8,
}

impl FigureId {
    pub const ALL: [FigureId; 11] = [
        FigureId::Fig1,
        FigureId::Fig2,
        FigureId::Fig3a,
        FigureId::Fig3b,
        FigureId::Fig4,
        FigureId::Fig5,
        FigureId::Fig6,
        FigureId::Fig7,
        FigureId::Fig6b,
        FigureId::Fig7b,
        FigureId::Fig8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
            FigureId::Fig6b => "fig6b",
            FigureId::Fig7b => "fig7b",
            FigureId::Fig8 => "fig8",
        }
    }

    /// True for the φ-sweep datasets, whose primary content is `|η̄|²`.
    pub fn is_phase_sweep(self) -> bool {
        matches!(self, FigureId::Fig6 | FigureId::Fig7)
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureId {
    type Err = ScanError;

    fn from_str(s: &str) -> Result<Self, ScanError> {
        FigureId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ScanError::UnknownFigure(s.to_string()))
    }
}

/// Optional replacements for a dataset's defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FigureOverrides {
    pub t_max: Option<f64>,
    pub n_points: Option<usize>,
    pub phi: Option<f64>,
    pub beta: Option<f64>,
    pub coupling_g: Option<f64>,
}

/// `|η̄|²` on a grid for each phase of [`PHASE_GRID`].
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSweep {
    pub omega: f64,
    pub omega_big: f64,
    pub phis: Vec<f64>,
    pub grid: Vec<f64>,
    /// One column per phase, aligned with `grid`.
    pub eta_bar_abs2: Vec<Vec<f64>>,
    /// Column maxima.
    pub sup: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub id: FigureId,
    pub series: MarkerSeries,
    pub phase_sweep: Option<PhaseSweep>,
    pub metadata: BTreeMap<String, String>,
}

struct Setup {
    omega_big: f64,
    omegas: Vec<f64>,
    t_max: f64,
    /// `(ω, Ω)` integer pairs when the relation is exactly fractional.
    exact: Option<Vec<(u64, u64)>>,
    description: &'static str,
}

fn five_near_five() -> Vec<f64> {
    (1..=5).map(|k| (25.0 + 0.01 * k as f64).sqrt()).collect()
}

fn setup(id: FigureId) -> Setup {
    let ints = |big: u64, ws: &[u64]| Some(ws.iter().map(|&w| (w, big)).collect());
    match id {
        FigureId::Fig1 => Setup {
            omega_big: 4.0,
            omegas: vec![3.9],
            t_max: 150.0,
            exact: None,
            description: "beating envelope at (Omega, omega) = (4, 3.9), period 2pi/0.1",
        },
        FigureId::Fig2 => Setup {
            omega_big: 7.0,
            omegas: vec![5.0],
            t_max: 4.0 * PI,
            exact: ints(7, &[5]),
            description: "omega = 5, Omega = 7; markers return to 1 at t = p pi",
        },
        FigureId::Fig3a => Setup {
            omega_big: 3.0,
            omegas: vec![2.0],
            t_max: 6.0 * PI,
            exact: ints(3, &[2]),
            description: "omega = 2, Omega = 3; recurrence spacing 2pi",
        },
        FigureId::Fig3b => Setup {
            omega_big: 6.0,
            omegas: vec![4.0],
            t_max: 6.0 * PI,
            exact: ints(6, &[4]),
            description: "omega = 4, Omega = 6; same ratio as fig3a, recurrence spacing pi",
        },
        FigureId::Fig4 => Setup {
            omega_big: 7.0,
            omegas: vec![2.0, 3.0, 4.0, 5.0, 6.0],
            t_max: 4.0 * PI,
            exact: ints(7, &[2, 3, 4, 5, 6]),
            description: "Omega = 7, omega = 2..6; total decoherence factor recurs at 2pi",
        },
        FigureId::Fig5 => Setup {
            omega_big: 50f64.sqrt(),
            omegas: vec![26f64.sqrt()],
            t_max: 50.0,
            exact: None,
            description: "non-fractional pair close to omega:Omega = 5:7",
        },
        FigureId::Fig6 => Setup {
            omega_big: 5f64.sqrt(),
            omegas: vec![3f64.sqrt()],
            t_max: 50.0,
            exact: None,
            description: "phase sweep, Omega > omega (sqrt5, sqrt3): |eta_bar|^2 largest at phi = pi/2",
        },
        FigureId::Fig7 => Setup {
            omega_big: 3f64.sqrt(),
            omegas: vec![5f64.sqrt()],
            t_max: 50.0,
            exact: None,
            description: "phase sweep, Omega < omega (sqrt3, sqrt5): |eta_bar|^2 largest at phi = 0",
        },
        FigureId::Fig6b => Setup {
            omega_big: 7.0,
            omegas: five_near_five(),
            t_max: 50.0,
            exact: None,
            description: "five oscillators omega_k = sqrt(25 + 0.01k), Omega = 7, window 50",
        },
        FigureId::Fig7b => Setup {
            omega_big: 7.0,
            omegas: five_near_five(),
            t_max: 500.0,
            exact: None,
            description: "five oscillators omega_k = sqrt(25 + 0.01k), Omega = 7, window 500",
        },
        FigureId::Fig8 => Setup {
            omega_big: 7.0,
            omegas: five_near_five(),
            t_max: 10_000.0,
            exact: None,
            description: "five oscillators omega_k = sqrt(25 + 0.01k), Omega = 7, window 10000",
        },
    }
}

/// `|η̄|²` for each phase of [`PHASE_GRID`] on `grid`.
pub fn phase_sweep(omega: f64, omega_big: f64, grid: &[f64]) -> PhaseSweep {
    let eta_bar_abs2: Vec<Vec<f64>> = PHASE_GRID
        .par_iter()
        .map(|&phi| grid.iter().map(|&t| eta_bar(omega, omega_big, phi, t).norm_sqr()).collect())
        .collect();
    let sup = eta_bar_abs2
        .iter()
        .map(|col| col.iter().copied().fold(0.0, f64::max))
        .collect();
    PhaseSweep {
        omega,
        omega_big,
        phis: PHASE_GRID.to_vec(),
        grid: grid.to_vec(),
        eta_bar_abs2,
        sup,
    }
}

pub fn figure_data(id: FigureId, overrides: &FigureOverrides) -> Result<FigureData, ScanError> {
    let setup = setup(id);
    let ensemble = Ensemble {
        central: CentralOscillator {
            mass_m: 1.0,
            omega_big: setup.omega_big,
        },
        oscillators: setup
            .omegas
            .iter()
            .map(|&omega| EnvOscillator {
                mass_m: 1.0,
                omega,
                coupling_g: overrides.coupling_g.unwrap_or(1.0),
            })
            .collect(),
        bath: ThermalBath {
            beta: overrides.beta.unwrap_or(1.0),
        },
        trajectory: TrajectoryPair {
            y: 1.0,
            y_prime: 0.0,
            phi: overrides.phi.unwrap_or(0.0),
        },
    };
    let t_max = overrides.t_max.unwrap_or(setup.t_max);
    let n_points = overrides
        .n_points
        .unwrap_or_else(|| default_grid_points(&ensemble, 0.0, t_max));
    let series = marker_series(&ensemble, 0.0, t_max, n_points)?;

    let mut metadata = BTreeMap::new();
    metadata.insert("figure".to_string(), id.name().to_string());
    metadata.insert("description".to_string(), setup.description.to_string());
    metadata.insert("omega_big".to_string(), format!("{:.17e}", setup.omega_big));
    metadata.insert(
        "omegas".to_string(),
        setup.omegas.iter().map(|w| format!("{w:.17e}")).collect::<Vec<_>>().join(" "),
    );
    metadata.insert("window".to_string(), format!("0 {t_max:.17e}"));
    metadata.insert("n_points".to_string(), n_points.to_string());
    metadata.insert(
        "defaults".to_string(),
        format!(
            "g={} m=1 M=1 beta={} Y=1 Y'=0 phi={}",
            ensemble.oscillators[0].coupling_g, ensemble.bath.beta, ensemble.trajectory.phi
        ),
    );
    if let Some(pairs) = &setup.exact {
        let fractions = pairs
            .iter()
            .map(|&(w, big)| reduce_ratio(w, big))
            .collect::<Result<Vec<_>, _>>()
            .expect("built-in frequencies are positive");
        metadata.insert(
            "fractions".to_string(),
            fractions.iter().map(|f| format!("{f} {}", f.parity_class())).collect::<Vec<_>>().join(", "),
        );
        let recurrence = common_recurrence(setup.omega_big, &fractions).expect("non-empty");
        metadata.insert("common_recurrence".to_string(), format!("{recurrence:.17e}"));
    }
    if id == FigureId::Fig5 {
        metadata.insert(
            "note".to_string(),
            "the ratio is quoted as sqrt(7^2+1):sqrt(5^2+1) in omega:Omega order, which is about 1.387 \
             and not close to 5:7; this dataset uses omega = sqrt(26), Omega = sqrt(50) (ratio 0.7211)"
                .to_string(),
        );
    }

    let phase_sweep = if id.is_phase_sweep() {
        let grid = uniform_grid(0.0, t_max, n_points)?;
        let sweep = phase_sweep(setup.omegas[0], setup.omega_big, &grid);
        metadata.insert(
            "sup_eta_bar_abs2".to_string(),
            sweep.sup.iter().map(|s| format!("{s:.17e}")).collect::<Vec<_>>().join(" "),
        );
        Some(sweep)
    } else {
        None
    };

    Ok(FigureData {
        id,
        series,
        phase_sweep,
        metadata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::{detect_recurrences, envelope_check};

    #[test]
    fn ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert_eq!("fig9".parse::<FigureId>(), Err(ScanError::UnknownFigure("fig9".into())));
    }

    #[test]
    fn fig2_touches_one_on_lattice() {
        let data = figure_data(FigureId::Fig2, &FigureOverrides::default()).unwrap();
        let r = detect_recurrences(&data.series, 1.0 - 1e-9);
        assert_eq!(r.hit_times.len(), 3);
        assert_eq!(data.metadata["fractions"], "5/7 OddOdd");
    }

    #[test]
    fn fig3_spacings() {
        for (id, spacing) in [(FigureId::Fig3a, 2.0 * PI), (FigureId::Fig3b, PI)] {
            let data = figure_data(id, &FigureOverrides::default()).unwrap();
            let r = detect_recurrences(&data.series, 1.0 - 1e-9);
            assert!(r.hit_times.len() >= 2);
            for w in r.hit_times.windows(2) {
                assert!((w[1] - w[0] - spacing).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn fig4_columns_and_product_bound() {
        let data = figure_data(FigureId::Fig4, &FigureOverrides::default()).unwrap();
        assert_eq!(data.series.points[0].gamma_sq_per_osc.len(), 5);
        for p in data.series.points.iter().filter(|p| p.t > 0.1 && (p.t - 2.0 * PI).abs() > 0.1) {
            let smallest = p.gamma_sq_per_osc.iter().copied().fold(1.0, f64::min);
            if p.gamma_sq_per_osc.iter().all(|&v| v < 1.0) {
                assert!(p.gamma_sq_total < smallest);
            }
        }
    }

    #[test]
    fn phase_sweeps_are_ordered() {
        let fig6 = figure_data(FigureId::Fig6, &FigureOverrides::default()).unwrap();
        let sup = &fig6.phase_sweep.unwrap().sup;
        assert!(sup.windows(2).all(|w| w[1] >= w[0]), "{sup:?}");
        let fig7 = figure_data(FigureId::Fig7, &FigureOverrides::default()).unwrap();
        let sup = &fig7.phase_sweep.unwrap().sup;
        assert!(sup.windows(2).all(|w| w[1] <= w[0]), "{sup:?}");
    }

    #[test]
    fn fig1_envelope() {
        let data = figure_data(FigureId::Fig1, &FigureOverrides::default()).unwrap();
        assert_eq!(data.series.grid.last().copied(), Some(150.0));
        assert!(envelope_check(3.9, 4.0, 0.0, 150.0).unwrap().relative_mismatch() < 0.02);
    }

    #[test]
    fn overrides_apply() {
        let o = FigureOverrides {
            t_max: Some(3.0),
            n_points: Some(7),
            phi: Some(0.4),
            ..Default::default()
        };
        let data = figure_data(FigureId::Fig5, &o).unwrap();
        assert_eq!(data.series.len(), 7);
        assert_eq!(data.series.ensemble.trajectory.phi, 0.4);
        assert!(data.metadata.contains_key("note"));
    }
}
