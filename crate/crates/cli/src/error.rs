use std::path::PathBuf;

use thiserror::Error;

/// Failures of a CLI command, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] cdlat_core::Error),
    #[error("oracle disagreement: {0}")]
    Mismatch(String),
    #[error("{0} claim(s) failed")]
    ClaimsFailed(usize),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        use cdlat_core::Error as E;
        match self {
            CliError::ClaimsFailed(_) => 1,
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Core(E::Domain(_) | E::Precondition(_)) => 2,
            CliError::Core(E::Capacity { .. }) => 3,
            CliError::Core(E::Internal(_)) | CliError::Mismatch(_) => 4,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 2);
        assert_eq!(CliError::from(cdlat_core::Error::capacity("x", 1)).exit_code(), 3);
        assert_eq!(CliError::from(cdlat_core::Error::Internal("x".into())).exit_code(), 4);
        assert_eq!(CliError::Mismatch("x".into()).exit_code(), 4);
        assert_eq!(CliError::ClaimsFailed(2).exit_code(), 1);
    }
}
