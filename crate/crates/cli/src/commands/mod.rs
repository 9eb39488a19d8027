// SPDX-License-Identifier: Apache-2.0

pub mod figure;
pub mod fraction;
pub mod markers;
pub mod oracle;
pub mod phase;

use std::io::Write;
use std::path::Path;

use qbm_core::config::EnsembleConfig;
use qbm_core::Ensemble;

use crate::CliError;

pub fn load(path: &Path) -> Result<(EnsembleConfig, Ensemble), CliError> {
    let config = EnsembleConfig::from_path(path)?;
    let ensemble = config.ensemble()?;
    Ok((config, ensemble))
}

/// Writes to `path`, or to standard output when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

pub fn check_threshold(threshold: Option<f64>) -> Result<(), CliError> {
    match threshold {
        Some(t) if !(t > 0.0 && t <= 1.0) => Err(CliError::Usage(format!("--threshold must lie in (0, 1], got {t}"))),
        _ => Ok(()),
    }
}
