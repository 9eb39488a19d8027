// SPDX-License-Identifier: Apache-2.0

use qbm_core::config::ConfigError;
use qbm_core::fock::OracleError;
use qbm_core::scan::ScanError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("oracle did not converge: {0}")]
    NonConvergence(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Config(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
            CliError::NonConvergence(_) => 3,
        }
    }
}

impl From<ScanError> for CliError {
    fn from(err: ScanError) -> Self {
        match err {
            ScanError::InvalidRange { .. } | ScanError::UnknownFigure(_) => CliError::Usage(err.to_string()),
            ScanError::Beating(_) | ScanError::TooFewRecurrences(_) => CliError::Numerical(err.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::NotConvergedAtMaxDim { .. } | OracleError::NonConvergedStepSize { .. } => {
                CliError::NonConvergence(err.to_string())
            }
            OracleError::DimensionTooSmall(_) => CliError::Usage(err.to_string()),
            _ => CliError::Numerical(err.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Numerical("x".into()).exit_code(), 1);
        let err: CliError = OracleError::NotConvergedAtMaxDim { dim: 160, change: 1.0 }.into();
        assert_eq!(err.exit_code(), 3);
        let err: CliError = ScanError::UnknownFigure("fig9".into()).into();
        assert_eq!(err.exit_code(), 2);
    }
}
