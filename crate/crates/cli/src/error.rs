use std::path::PathBuf;

use discord_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    StateFile {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 0 success, 1 unphysical state, 2 usage or parse error, 3 failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::StateFile { .. } => 2,
            CliError::Verification(_) => 3,
            CliError::Core(e) => match e {
                CoreError::Range { .. }
                | CoreError::Domain { .. }
                | CoreError::Family { .. }
                | CoreError::Norm { .. } => 2,
                _ => 1,
            },
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
