use std::path::PathBuf;

/// Exit status of the command-line tool.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO_OR_PARSE: i32 = 2;
    pub const UNSUPPORTED: i32 = 3;
    pub const DOMAIN: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Parse(String),
    #[error("{context}: {source}")]
    Core { context: String, source: primpoints_core::Error },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn core(context: impl Into<String>, source: primpoints_core::Error) -> Self {
        CliError::Core { context: context.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        use primpoints_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse(_) => exit::IO_OR_PARSE,
            CliError::Core { source: E::Parse(_), .. } => exit::IO_OR_PARSE,
            CliError::Core { source: E::UnsupportedDivisorShape(_), .. } => exit::UNSUPPORTED,
            CliError::Core { .. } => exit::DOMAIN,
        }
    }
}

impl From<primpoints_core::Error> for CliError {
    fn from(e: primpoints_core::Error) -> Self {
        CliError::core("error", e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
