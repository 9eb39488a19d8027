// SPDX-License-Identifier: Apache-2.0

//! JSON run configuration.
//!
//! ```json
//! {
//!   "central": { "mass_M": 1, "omega_big": 7 },
//!   "oscillators": [ { "mass_m": 1, "omega": { "sqrt": 25.01 }, "coupling_g": 1 } ],
//!   "bath": { "beta": 1 },
//!   "trajectory": { "y": 1, "y_prime": 0, "phi": 0 }
//! }
//! ```
//!
//! Frequencies accept four spellings. A JSON integer is an exact rational,
//! `{"num": p, "den": q}` is the exact rational `p/q`, while a JSON float
//! and `{"sqrt": x}` are real values. Only exact values take part in the
//! fractional-relation analysis without an explicit rationalization step.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{
    CentralOscillator, EnvOscillator, Ensemble, ModelError, ThermalBath, TrajectoryPair,
};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read configuration: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed configuration: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid frequency: {0}")]
    Frequency(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Frequency {
    Integer(u64),
    Ratio { num: u64, den: u64 },
    Sqrt { sqrt: f64 },
    Real(f64),
}

impl Frequency {
    pub fn value(&self) -> Result<f64, ConfigError> {
        match *self {
            Frequency::Integer(n) => Ok(n as f64),
            Frequency::Ratio { num, den } => {
                if den == 0 {
                    Err(ConfigError::Frequency(format!("zero denominator in {num}/{den}")))
                } else {
                    Ok(num as f64 / den as f64)
                }
            }
            Frequency::Sqrt { sqrt } => {
                if sqrt < 0.0 || !sqrt.is_finite() {
                    Err(ConfigError::Frequency(format!("sqrt of {sqrt}")))
                } else {
                    Ok(sqrt.sqrt())
                }
            }
            Frequency::Real(x) => Ok(x),
        }
    }

    /// The exact rational `(num, den)` when the frequency was declared as one.
    pub fn exact(&self) -> Option<(u64, u64)> {
        match *self {
            Frequency::Integer(n) => Some((n, 1)),
            Frequency::Ratio { num, den } if den > 0 => Some((num, den)),
            _ => None,
        }
    }
}

impl From<f64> for Frequency {
    fn from(x: f64) -> Self {
        Frequency::Real(x)
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Frequency::Integer(n) => write!(f, "{n}"),
            Frequency::Ratio { num, den } => write!(f, "{num}/{den}"),
            Frequency::Sqrt { sqrt } => write!(f, "sqrt({sqrt})"),
            Frequency::Real(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralConfig {
    #[serde(rename = "mass_M", default = "unit_mass")]
    pub mass_m: f64,
    pub omega_big: Frequency,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillatorConfig {
    #[serde(default = "unit_mass")]
    pub mass_m: f64,
    pub omega: Frequency,
    pub coupling_g: f64,
}

fn unit_mass() -> f64 {
    1.0
}

/// The document as written on disk. Convert with [`EnsembleConfig::ensemble`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub central: CentralConfig,
    pub oscillators: Vec<OscillatorConfig>,
    pub bath: ThermalBath,
    pub trajectory: TrajectoryPair,
}

impl EnsembleConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serializes")
    }

    /// Resolves frequencies to reals and validates the resulting ensemble.
    pub fn ensemble(&self) -> Result<Ensemble, ConfigError> {
        let central = CentralOscillator {
            mass_m: self.central.mass_m,
            omega_big: self.central.omega_big.value()?,
        };
        let oscillators = self
            .oscillators
            .iter()
            .map(|o| {
                Ok(EnvOscillator {
                    mass_m: o.mass_m,
                    omega: o.omega.value()?,
                    coupling_g: o.coupling_g,
                })
            })
            .collect::<Result<Vec<_>, ConfigError>>()?;
        let ens = Ensemble {
            central,
            oscillators,
            bath: self.bath,
            trajectory: self.trajectory,
        };
        Ok(ens.validate()?)
    }

    /// Builds a configuration with real-valued frequencies from an ensemble.
    pub fn from_ensemble(ens: &Ensemble) -> Self {
        EnsembleConfig {
            central: CentralConfig {
                mass_m: ens.central.mass_m,
                omega_big: Frequency::Real(ens.central.omega_big),
            },
            oscillators: ens
                .oscillators
                .iter()
                .map(|o| OscillatorConfig {
                    mass_m: o.mass_m,
                    omega: Frequency::Real(o.omega),
                    coupling_g: o.coupling_g,
                })
                .collect(),
            bath: ens.bath,
            trajectory: ens.trajectory,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG2: &str = r#"{
        "central": { "mass_M": 1, "omega_big": 7 },
        "oscillators": [ { "mass_m": 1, "omega": 5, "coupling_g": 1 } ],
        "bath": { "beta": 1 },
        "trajectory": { "y": 1, "y_prime": 0, "phi": 0 }
    }"#;

    #[test]
    fn integers_are_exact() {
        let cfg = EnsembleConfig::from_json(FIG2).unwrap();
        assert_eq!(cfg.central.omega_big, Frequency::Integer(7));
        assert_eq!(cfg.oscillators[0].omega.exact(), Some((5, 1)));
        let ens = cfg.ensemble().unwrap();
        assert_eq!(ens.oscillators[0].omega, 5.0);
    }

    #[test]
    fn frequency_spellings() {
        let f: Frequency = serde_json::from_str("5.0").unwrap();
        assert_eq!(f, Frequency::Real(5.0));
        assert_eq!(f.exact(), None);
        let f: Frequency = serde_json::from_str(r#"{"sqrt": 25.01}"#).unwrap();
        assert_eq!(f.value().unwrap(), 25.01_f64.sqrt());
        let f: Frequency = serde_json::from_str(r#"{"num": 39, "den": 10}"#).unwrap();
        assert_eq!(f.exact(), Some((39, 10)));
        assert!((f.value().unwrap() - 3.9).abs() < 1e-15);
        let f = Frequency::Ratio { num: 1, den: 0 };
        assert!(f.value().is_err());
    }

    #[test]
    fn invalid_model_is_reported() {
        let text = FIG2.replace("\"omega\": 5", "\"omega\": -1.0");
        let err = EnsembleConfig::from_json(&text).unwrap().ensemble().unwrap_err();
        assert!(matches!(
            err,
            ConfigError::Model(ModelError::NonPositiveParameter("omega"))
        ));
    }

    #[test]
    fn missing_key_is_a_parse_error() {
        let err = EnsembleConfig::from_json(r#"{"central": {"omega_big": 7}}"#).unwrap_err();
        assert!(matches!(err, ConfigError::Parse(_)));
    }

    #[test]
    fn json_round_trip() {
        let cfg = EnsembleConfig::from_json(FIG2).unwrap();
        let back = EnsembleConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(cfg, back);
    }
}
