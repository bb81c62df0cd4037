use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] woi_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for bad input, 2 for internal disagreement, 3 for a resource cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(woi_core::Error::ResourceCap { .. }) => 3,
            CliError::Core(woi_core::Error::EngineDisagreement { .. } | woi_core::Error::Inconsistent(_)) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub(crate) fn json(path: impl Into<PathBuf>, source: serde_json::Error) -> Self {
        CliError::Json { path: path.into(), source }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
