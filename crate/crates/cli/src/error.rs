use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent problem data.
    #[error("{field}: {message}")]
    Input { field: String, message: String },
    #[error("resource limit: {0}")]
    Cap(elliptic_weyl::Error),
    #[error("verification failed: {failed} of {total} checks did not pass")]
    Verify { failed: usize, total: usize },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Core(elliptic_weyl::Error),
}

impl CliError {
    pub fn input(field: impl Into<String>, message: impl std::fmt::Display) -> Self {
        CliError::Input {
            field: field.into(),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } | CliError::Io { .. } => 2,
            CliError::Cap(_) => 3,
            CliError::Verify { .. } => 4,
            CliError::Core(_) => 1,
        }
    }
}

impl From<elliptic_weyl::Error> for CliError {
    fn from(e: elliptic_weyl::Error) -> Self {
        use elliptic_weyl::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::Cap(e),
            E::InvalidComponent { .. } => CliError::input("type", e),
            E::ZeroElliptic => CliError::input("t", "zero elliptic element (T must be non-zero)"),
            E::RankMismatch { field, .. } => CliError::input(field, e),
            other => CliError::Core(other),
        }
    }
}
