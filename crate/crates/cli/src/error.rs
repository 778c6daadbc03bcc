use std::path::PathBuf;

/// Everything a subcommand can fail with, mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spectra(#[from] signed_spectra::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    HFile {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    /// 2 for anything the caller got wrong, 1 for environment failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Spectra(_) | CliError::HFile { .. } => 2,
            CliError::Io { .. } | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
