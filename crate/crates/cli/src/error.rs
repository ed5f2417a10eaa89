use std::path::PathBuf;

use thiserror::Error;

/// Anything that prevents producing a report: unreadable files, malformed
/// or mistyped documents, and operation preconditions. All of these exit
/// with code 2; identity failures go into the report instead and exit 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("document error: {0}")]
    Schema(String),

    #[error("invalid document: {0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] homlie_core::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
