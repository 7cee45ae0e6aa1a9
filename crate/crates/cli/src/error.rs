use std::fmt;
use std::path::PathBuf;

/// Anything that makes a well-formed invocation fail. All of these exit with status 1.
#[derive(Debug)]
pub enum CliError {
    Domain(surfinv_core::Error),
    Io { path: PathBuf, message: String },
    Document(String),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.name(),
            CliError::Io { .. } => "Io",
            CliError::Document(_) => "InvalidDocument",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Document(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<surfinv_core::Error> for CliError {
    fn from(e: surfinv_core::Error) -> Self {
        CliError::Domain(e)
    }
}
