use std::fmt;

/// Errors reported by the optimizer, the Pareto toolkit and the problem suite.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on an argument was violated.
    InvalidArgument(String),
    /// The operation is not defined for this input (e.g. a reference front for `beam`).
    Unsupported(String),
    /// No feasible design was drawn during population initialization.
    InitializationFailed { problem: String, draws: usize },
    /// A problem name that is not in the registry.
    UnknownProblem(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported operation: {msg}"),
            Error::InitializationFailed { problem, draws } => write!(
                f,
                "initialization failed: no feasible design for `{problem}` after {draws} draws"
            ),
            Error::UnknownProblem(name) => write!(
                f,
                "unknown problem `{name}` (available: {})",
                crate::problems::PROBLEM_NAMES.join(", ")
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T, E = Error> = std::result::Result<T, E>;
