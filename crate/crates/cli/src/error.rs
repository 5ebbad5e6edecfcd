use std::fmt;
use std::io;
use std::path::PathBuf;

/// Failure of a harness command. The variant decides the exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unknown problem, unsupported request: exit status 1.
    Usage(String),
    /// A run could not complete, e.g. no feasible starting point: exit status 2.
    Runtime(String),
    /// Reading or writing an output file failed: exit status 2.
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) | CliError::Io { .. } => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<mofa::Error> for CliError {
    fn from(e: mofa::Error) -> Self {
        match e {
            mofa::Error::InitializationFailed { .. } => CliError::Runtime(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Runtime(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}
